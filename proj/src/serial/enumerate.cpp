#include "ctd/oracle.hpp"

namespace ctd {
namespace detail {
std::vector<vertex_set> enumerate(const graph &g, long long k, int eta, bool connected, bool parallel);
} // namespace detail

namespace serial {

std::vector<vertex_set> enumerate_tds(const graph &g, long long k, int eta, bool connected) {
	return detail::enumerate(g, k, eta, connected, false);
}

} // namespace serial
} // namespace ctd
