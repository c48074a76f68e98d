#include "ctd/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace ctd {

std::uint64_t binomial(int n, int k) {
	if(k < 0 || n < 0 || k > n)
		return 0;
	if(k > n - k)
		k = n - k;
	unsigned __int128 r = 1;
	for(int i = 1; i <= k; ++i) {
		r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
		if(r > std::numeric_limits<std::uint64_t>::max())
			return std::numeric_limits<std::uint64_t>::max();
	}
	return static_cast<std::uint64_t>(r);
}

std::vector<int> unrank_combination(int n, int k, std::uint64_t index) {
	if(index >= binomial(n, k))
		throw std::out_of_range("unrank_combination: index out of range");
	std::vector<int> out;
	out.reserve(k);
	int next = 0;
	for(int slot = 0; slot < k; ++slot) {
		for(int v = next; v < n; ++v) {
			// Number of combinations whose slot-th element is v.
			std::uint64_t block = binomial(n - v - 1, k - slot - 1);
			if(index < block) {
				out.push_back(v);
				next = v + 1;
				break;
			}
			index -= block;
		}
	}
	return out;
}

bool next_combination(std::vector<int> &c, int n) {
	const int k = static_cast<int>(c.size());
	int i = k - 1;
	while(i >= 0 && c[i] == n - k + i)
		--i;
	if(i < 0)
		return false;
	++c[i];
	for(int j = i + 1; j < k; ++j)
		c[j] = c[j - 1] + 1;
	return true;
}

} // namespace ctd
