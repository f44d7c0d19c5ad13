#include "legaug/dipped.hpp"

namespace legaug {

std::vector<std::pair<int, int>> push_order(int strands) {
    std::vector<std::pair<int, int>> order;
    for (int k = 2; k <= strands; ++k)
        for (int l = 1; l < k; ++l) order.push_back({k, l});
    return order;
}

DipPush insert_push(ResolvedDiagram& D, int begin, int done, int dip_index, int k, int l) {
    DipPush p;
    p.k = k;
    p.l = l;
    std::string suffix = std::to_string(dip_index) + "_" + std::to_string(k) + "_" + std::to_string(l);
    p.b = (GenId)D.gens.size();
    D.gens.push_back({"b" + suffix, GenClass::DipB, 0, -1});
    p.a = (GenId)D.gens.size();
    D.gens.push_back({"a" + suffix, GenClass::DipA, 0, -1});
    // the crossing of strands k,l sits at braid height k-l; each new pair
    // nests in the center of the dip built so far
    int pos = k - l;
    int at = begin + done;
    D.cols.insert(D.cols.begin() + at, {ColKind::Cross, pos, p.a, -1, 0});
    D.cols.insert(D.cols.begin() + at, {ColKind::Cross, pos, p.b, -1, 0});
    return p;
}

std::vector<DipPush> insert_full_dip(ResolvedDiagram& D, int at, int dip_index) {
    std::vector<DipPush> pushes;
    int done = 0;
    for (auto [k, l] : push_order(D.strands)) {
        pushes.push_back(insert_push(D, at, done, dip_index, k, l));
        ++done;
    }
    D.finalize();
    return pushes;
}

ResolvedDiagram build_dipped(const ResolvedDiagram& base) {
    ResolvedDiagram D = base;
    // gap k sits after the k-th original crossing; insert right-to-left so
    // earlier insertion points stay valid
    std::vector<int> cross_cols;
    for (int i = 0; i < (int)D.cols.size(); ++i)
        if (D.cols[i].kind == ColKind::Cross && D.gens[D.cols[i].gen].cls == GenClass::Crossing)
            cross_cols.push_back(i);
    int n = (int)cross_cols.size();
    for (int gap = n; gap >= 0; --gap) {
        int at;
        if (gap == 0) {
            at = 0;
            while (at < (int)D.cols.size() && D.cols[at].kind == ColKind::LeftCap) ++at;
        } else {
            at = cross_cols[gap - 1] + 1;
        }
        int done = 0;
        for (auto [k, l] : push_order(D.strands)) {
            insert_push(D, at, done, gap, k, l);
            ++done;
        }
    }
    D.finalize();
    return D;
}

} // namespace legaug
