#include "ctd/decomposer.hpp"

namespace ctd {
namespace detail {
std::optional<partition> decompose(const graph &g, const params &p, bool parallel);
} // namespace detail

namespace serial {

std::optional<partition> decompose(const graph &g, const params &p) {
	return detail::decompose(g, p, false);
}

} // namespace serial
} // namespace ctd
