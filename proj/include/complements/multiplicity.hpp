#pragma once

// Multiplicity data of a divisor: an ordered list of (label, value) pairs
// with pairwise distinct labels. Labels are opaque ids for prime divisors;
// a label that is absent reads as multiplicity 0, matching the convention
// that divisors extend by zero.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "complements/errors.hpp"
#include "complements/rat.hpp"

namespace complements {

class MultiplicityVector {
public:
    using Entry = std::pair<std::string, Rat>;

    MultiplicityVector() = default;
    explicit MultiplicityVector(std::vector<Entry> entries) {
        for (auto& [label, value] : entries) set(label, value);
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    bool has(const std::string& label) const { return find(label) != entries_.end(); }

    Rat get(const std::string& label) const {
        auto it = find(label);
        return it == entries_.end() ? Rat(0) : it->second;
    }

    void set(const std::string& label, const Rat& value) {
        auto it = find(label);
        if (it != entries_.end())
            it->second = value;
        else
            entries_.emplace_back(label, value);
    }

    std::set<std::string> labels() const {
        std::set<std::string> out;
        for (const auto& [label, value] : entries_) out.insert(label);
        return out;
    }

    static std::set<std::string> joint_labels(const MultiplicityVector& a,
                                              const MultiplicityVector& b) {
        std::set<std::string> out = a.labels();
        for (const auto& [label, value] : b.entries()) out.insert(label);
        return out;
    }

    Rat sum() const {
        Rat s = 0;
        for (const auto& [label, value] : entries_) s += value;
        return s;
    }

    // Values sorted b1 >= b2 >= ... (zeros included as stored).
    std::vector<Rat> sorted_values() const {
        std::vector<Rat> vs;
        vs.reserve(entries_.size());
        for (const auto& [label, value] : entries_) vs.push_back(value);
        std::sort(vs.begin(), vs.end(), [](const Rat& a, const Rat& b) { return b < a; });
        return vs;
    }

    bool all_in_unit_interval() const {
        for (const auto& [label, value] : entries_)
            if (value < 0 || value > 1) return false;
        return true;
    }

    friend bool operator==(const MultiplicityVector& a, const MultiplicityVector& b) {
        for (const auto& label : joint_labels(a, b))
            if (a.get(label) != b.get(label)) return false;
        return true;
    }

private:
    std::vector<Entry>::iterator find(const std::string& label) {
        return std::find_if(entries_.begin(), entries_.end(),
                            [&](const Entry& e) { return e.first == label; });
    }
    std::vector<Entry>::const_iterator find(const std::string& label) const {
        return std::find_if(entries_.begin(), entries_.end(),
                            [&](const Entry& e) { return e.first == label; });
    }

    std::vector<Entry> entries_;
};

// Entrywise a <= b over the joint label set.
inline bool leq_entrywise(const MultiplicityVector& a, const MultiplicityVector& b) {
    for (const auto& label : MultiplicityVector::joint_labels(a, b))
        if (!(a.get(label) <= b.get(label))) return false;
    return true;
}

// Maximal-absolute-value norm of a - b over the joint label set.
inline Rat max_norm_distance(const MultiplicityVector& a, const MultiplicityVector& b) {
    Rat d = 0;
    for (const auto& label : MultiplicityVector::joint_labels(a, b))
        d = max(d, abs(a.get(label) - b.get(label)));
    return d;
}

}  // namespace complements
