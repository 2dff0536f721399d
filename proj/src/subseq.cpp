#include "mlp/subseq.hpp"

#include <string>

namespace mlp {

void SubseqTables::rebuild(const Instance& instance, std::span<const int> tour) {
    validate_tour(instance, tour);

    instance_ = &instance;
    m_ = static_cast<int>(tour.size());
    tour_.assign(tour.begin(), tour.end());
    const std::size_t mm = static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_);
    fwd_.assign(mm, SubseqData{});
    rev_.assign(mm, SubseqData{});

    auto base = [&](int pos) { return SubseqData{tour_[pos] == 0 ? 0 : 1, 0, 0}; };

    for (int i = 0; i < m_; ++i) {
        fwd_[idx(i, i)] = base(i);
        for (int j = i + 1; j < m_; ++j)
            fwd_[idx(i, j)] =
                concat(fwd_[idx(i, j - 1)], base(j), instance.dist(tour_[j - 1], tour_[j]));
    }
    for (int i = m_ - 1; i >= 0; --i) {
        rev_[idx(i, i)] = base(i);
        for (int j = i + 1; j < m_; ++j) {
            // rev(i,j) visits tour[j], ..., tour[i]; peel tour[i] off the end.
            // Filled with i descending so rev(i+1, j) is already present.
            rev_[idx(i, j)] =
                concat(rev_[idx(i + 1, j)], base(i), instance.dist(tour_[i + 1], tour_[i]));
        }
    }
}

Cost SubseqTables::tour_cost() const {
    SubseqData whole = fwd_[idx(0, m_ - 1)];
    if (instance_->variant() == Variant::circuit)
        whole = concat(whole, SubseqData{1, 0, 0}, instance_->dist(tour_[m_ - 1], 0));
    return whole.c;
}

Cost SubseqTables::eval(std::span<const SegRef> segments) const {
    if (segments.empty())
        throw ContractViolation("eval: empty segment list");
    const SegRef& head = segments[0];
    if (head.first != 0 || head.reversed)
        throw ContractViolation("eval: first segment must begin with the depot");

    int covered = 0;
    SubseqData acc{};
    int last_pos = 0;
    bool first = true;
    for (const SegRef& s : segments) {
        if (s.first < 0 || s.last >= m_ || s.first > s.last)
            throw ContractViolation("eval: segment [" + std::to_string(s.first) + ".." +
                                    std::to_string(s.last) + "] out of range");
        covered += s.last - s.first + 1;
        const SubseqData& data = s.reversed ? rev_[idx(s.first, s.last)] : fwd_[idx(s.first, s.last)];
        if (first) {
            acc = data;
            first = false;
        } else {
            const int first_pos = s.reversed ? s.last : s.first;
            acc = concat(acc, data, instance_->dist(tour_[last_pos], tour_[first_pos]));
        }
        last_pos = s.reversed ? s.first : s.last;
    }
    if (covered != m_)
        throw ContractViolation("eval: segments cover " + std::to_string(covered) +
                                " positions, tour has " + std::to_string(m_));
    if (instance_->variant() == Variant::circuit)
        acc = concat(acc, SubseqData{1, 0, 0}, instance_->dist(tour_[last_pos], 0));
    return acc.c;
}

void validate_partition(std::span<const SegRef> segments, int m) {
    if (segments.empty())
        throw ContractViolation("reordering: empty segment list");
    if (segments[0].first != 0 || segments[0].reversed)
        throw ContractViolation("reordering: first segment must begin with the depot");
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (const SegRef& s : segments) {
        if (s.first < 0 || s.last >= m || s.first > s.last)
            throw ContractViolation("reordering: segment [" + std::to_string(s.first) + ".." +
                                    std::to_string(s.last) + "] out of range");
        for (int p = s.first; p <= s.last; ++p) {
            if (seen[static_cast<std::size_t>(p)])
                throw ContractViolation("reordering: position " + std::to_string(p) +
                                        " covered twice");
            seen[static_cast<std::size_t>(p)] = 1;
        }
    }
    for (int p = 0; p < m; ++p)
        if (!seen[static_cast<std::size_t>(p)])
            throw ContractViolation("reordering: position " + std::to_string(p) + " not covered");
}

Cost eval_reordering(const SubseqTables& tables, std::span<const SegRef> segments) {
    validate_partition(segments, tables.size());
    return tables.eval(segments);
}

} // namespace mlp
