#pragma once

#include <utility>
#include <vector>

#include "oracles.hpp"
#include "radon/radon.hpp"

namespace support {

using namespace radon;

inline oracle::Set as_set(const Subgroup& s) { return {s.elements().begin(), s.elements().end()}; }

inline oracle::Rows as_rows(const RationalMatrix& m) {
    oracle::Rows out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

inline RationalMatrix from_rows(const oracle::Rows& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

inline std::vector<GroupPtr> corpus() {
    std::vector<GroupPtr> out;
    for (const auto& name : default_corpus()) out.push_back(share(load_group(name)));
    return out;
}

inline std::vector<std::pair<Subgroup, Subgroup>> nested_pairs(const GroupPtr& g) {
    std::vector<std::pair<Subgroup, Subgroup>> out;
    const auto subs = all_subgroups(g);
    for (const auto& h : subs)
        for (const auto& l : subs)
            if (l.is_subset_of(h)) out.emplace_back(l, h);
    return out;
}

inline Subgroup gen(const GroupPtr& g, std::vector<Element> generators) { return Subgroup::generated_by(g, generators); }

/// S3 transpositions in the lexicographic numbering.
constexpr Element s3_12 = 2, s3_13 = 5, s3_23 = 1;

}  // namespace support
