#include "construct_internal.hpp"

namespace polysurf {

ConstructionResult density_family(int) { fail(ErrorCode::BadInput, "not yet built"); }
std::size_t density_inner_octagon_count(int) { fail(ErrorCode::BadInput, "not yet built"); }

}  // namespace polysurf
