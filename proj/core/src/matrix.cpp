#include "symgap/matrix.hpp"

#include <algorithm>

namespace symgap {

namespace {

// (leading column, nonzero count, stable id) pivot preference
template <class Row>
bool better_pivot(const Row& a, int ida, const Row& b, int idb) {
    if (a.begin()->first != b.begin()->first) return a.begin()->first < b.begin()->first;
    if (a.size() != b.size()) return a.size() < b.size();
    return ida < idb;
}

} // namespace

Echelon<Rational> echelon_form(const SparseMatrix<Rational>& m) {
    std::vector<detail::IntRow> active;
    std::vector<int> ids;
    for (int r = 0; r < m.rows(); ++r) {
        detail::IntRow row = detail::clear_denominators(m.row(r));
        if (!row.empty()) {
            active.push_back(std::move(row));
            ids.push_back(r);
        }
    }
    std::vector<detail::IntRow> pivots;
    while (!active.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < active.size(); ++i)
            if (better_pivot(active[i], ids[i], active[best], ids[best])) best = i;
        detail::IntRow piv = std::move(active[best]);
        int lead = piv.begin()->first;
        const Integer& p = piv.begin()->second;
        active.erase(active.begin() + best);
        ids.erase(ids.begin() + best);
        std::vector<detail::IntRow> next;
        std::vector<int> next_ids;
        for (std::size_t i = 0; i < active.size(); ++i) {
            detail::IntRow& row = active[i];
            auto it = row.find(lead);
            if (it != row.end()) {
                Integer a = it->second;
                detail::IntRow upd;
                for (const auto& [c, v] : row) upd[c] = v * p;
                for (const auto& [c, v] : piv) {
                    auto jt = upd.find(c);
                    Integer nv = (jt == upd.end() ? Integer(0) : jt->second) - v * a;
                    if (nv == 0) { if (jt != upd.end()) upd.erase(jt); }
                    else upd[c] = nv;
                }
                detail::remove_content(upd);
                row = std::move(upd);
            }
            if (!row.empty()) {
                next.push_back(std::move(row));
                next_ids.push_back(ids[i]);
            }
        }
        active = std::move(next);
        ids = std::move(next_ids);
        pivots.push_back(std::move(piv));
    }
    std::sort(pivots.begin(), pivots.end(),
              [](const detail::IntRow& a, const detail::IntRow& b) {
                  return a.begin()->first < b.begin()->first;
              });
    Echelon<Rational> e;
    e.cols = m.cols();
    e.rank = static_cast<int>(pivots.size());
    for (const auto& row : pivots) {
        std::map<int, Rational> qrow;
        for (const auto& [c, v] : row) qrow.emplace(c, Rational(v));
        e.pivot_cols.push_back(row.begin()->first);
        e.rows.push_back(std::move(qrow));
    }
    return e;
}

Echelon<RationalFunction> echelon_form(const SparseMatrix<RationalFunction>& m) {
    using Row = std::map<int, RationalFunction>;
    auto normalize = [](Row& row) {
        if (row.empty()) return;
        RationalFunction lead = row.begin()->second;
        for (auto& [c, v] : row) v = v / lead;
    };
    std::vector<Row> active;
    std::vector<int> ids;
    for (int r = 0; r < m.rows(); ++r) {
        Row row = m.row(r);
        if (!row.empty()) {
            normalize(row);
            active.push_back(std::move(row));
            ids.push_back(r);
        }
    }
    std::vector<Row> pivots;
    while (!active.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < active.size(); ++i)
            if (better_pivot(active[i], ids[i], active[best], ids[best])) best = i;
        Row piv = std::move(active[best]);
        int lead = piv.begin()->first;
        active.erase(active.begin() + best);
        ids.erase(ids.begin() + best);
        std::vector<Row> next;
        std::vector<int> next_ids;
        for (std::size_t i = 0; i < active.size(); ++i) {
            Row& row = active[i];
            auto it = row.find(lead);
            if (it != row.end()) {
                RationalFunction a = it->second; // pivot entry is 1 after normalize
                for (const auto& [c, v] : piv) {
                    auto jt = row.find(c);
                    RationalFunction nv = (jt == row.end() ? RationalFunction() : jt->second) - a * v;
                    if (nv.is_zero()) row.erase(c);
                    else row[c] = nv;
                }
                normalize(row);
            }
            if (!row.empty()) {
                next.push_back(std::move(row));
                next_ids.push_back(ids[i]);
            }
        }
        active = std::move(next);
        ids = std::move(next_ids);
        pivots.push_back(std::move(piv));
    }
    std::sort(pivots.begin(), pivots.end(),
              [](const Row& a, const Row& b) { return a.begin()->first < b.begin()->first; });
    Echelon<RationalFunction> e;
    e.cols = m.cols();
    e.rank = static_cast<int>(pivots.size());
    for (auto& row : pivots) {
        e.pivot_cols.push_back(row.begin()->first);
        e.rows.push_back(std::move(row));
    }
    return e;
}

} // namespace symgap
