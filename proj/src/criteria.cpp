#include "skylattice/criteria.hpp"

#include <algorithm>
#include <unordered_set>

#include "skylattice/errors.hpp"

namespace skylattice {

bool canonical_less(CriterionSet a, CriterionSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::vector<CriterionSet> all_subsets(std::size_t d) {
    if (d > kMaxCriteria) throw ContractViolation("at most 63 criteria are supported");
    if (d >= 32) throw ContractViolation("refusing to enumerate 2^d subsets for d >= 32");
    std::vector<CriterionSet> out;
    out.reserve(std::size_t{1} << d);
    for (CriterionSet::Mask m = 0; m < (CriterionSet::Mask{1} << d); ++m) out.emplace_back(m);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

CriterionNames::CriterionNames(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxCriteria)
        throw SchemaError("too many criteria: " + std::to_string(names_.size()) + " (max 63)");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw SchemaError("criterion names must be non-empty");
        if (!seen.insert(n).second) throw SchemaError("duplicate criterion name: " + n);
        if (n.size() != 1) compact_ = false;
    }
}

std::string CriterionNames::render(CriterionSet set) const {
    std::string out;
    bool first = true;
    set.for_each([&](CriterionId id) {
        if (!compact_ && !first) out += ',';
        out += id < names_.size() ? names_[id] : "#" + std::to_string(id);
        first = false;
    });
    return out;
}

CriterionId CriterionNames::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return static_cast<CriterionId>(it - names_.begin());
}

CriterionSet CriterionNames::parse(const std::string& text) const {
    CriterionSet out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        std::string token = text.substr(start, end - start);
        if (!token.empty()) {
            auto id = find(token);
            if (id < names_.size()) {
                out = out.with(id);
            } else if (compact_) {
                for (char ch : token) {
                    auto cid = find(std::string(1, ch));
                    if (cid >= names_.size()) throw SchemaError("unknown criterion: " + token);
                    out = out.with(cid);
                }
            } else {
                throw SchemaError("unknown criterion: " + token);
            }
        }
        start = end + 1;
    }
    return out;
}

}  // namespace skylattice
