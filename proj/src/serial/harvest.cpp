#include "ctd/flow_steiner.hpp"

#include "../flow_steiner_detail.hpp"

namespace ctd::serial {

vertex_set harvest_connectors(const graph &g, const vertex_set &candidates, long long t,
                              long long budget) {
	return detail::harvest(g, candidates, t, budget, false);
}

} // namespace ctd::serial
