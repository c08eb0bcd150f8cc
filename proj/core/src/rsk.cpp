#include "arcperm/rsk.hpp"

#include <algorithm>

namespace arcperm {

std::pair<StandardTableau, StandardTableau> rsk(const Permutation& p) {
    std::vector<std::vector<int>> P, Q;
    for (int i = 1; i <= p.degree(); ++i) {
        int v = p(i);
        std::size_t r = 0;
        while (true) {
            if (r == P.size()) {
                P.push_back({v});
                Q.push_back({i});
                break;
            }
            auto it = std::upper_bound(P[r].begin(), P[r].end(), v);
            if (it == P[r].end()) {
                P[r].push_back(v);
                Q[r].push_back(i);
                break;
            }
            std::swap(*it, v);  // bump and insert into the next row
            ++r;
        }
    }
    Shape shape;
    for (const auto& row : P) shape.parts.push_back(static_cast<int>(row.size()));
    return {StandardTableau{shape, P}, StandardTableau{shape, Q}};
}

}  // namespace arcperm
