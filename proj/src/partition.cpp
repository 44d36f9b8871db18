#include "skylattice/partition.hpp"

#include <algorithm>
#include <map>

#include "skylattice/errors.hpp"

namespace skylattice {

namespace {

void require_same_universe(const Partition& p, const Partition& q) {
    if (p.universe() != q.universe()) throw ContractViolation("partitions are over different universes");
}

// block index per id value; -1 for ids outside the universe
std::vector<long> block_index(const Partition& p) {
    std::uint32_t max_id = p.universe().empty() ? 0 : p.universe().back().value;
    std::vector<long> idx(max_id + 1, -1);
    for (std::size_t b = 0; b < p.blocks().size(); ++b)
        for (auto id : p.blocks()[b]) idx[id.value] = static_cast<long>(b);
    return idx;
}

// Keeps only the ⊆-maximal members of a family of sorted sets (duplicates collapse).
std::vector<Block> maximal_sets(std::vector<Block> family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<Block> out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < family.size() && !dominated; ++j) {
            if (i == j || family[j].size() <= family[i].size()) continue;
            dominated = std::includes(family[j].begin(), family[j].end(), family[i].begin(), family[i].end());
        }
        if (!dominated) out.push_back(family[i]);
    }
    return out;
}

}  // namespace

Partition::Partition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    for (auto& b : blocks_) {
        if (b.empty()) throw ContractViolation("partition blocks must be non-empty");
        std::sort(b.begin(), b.end());
        universe_.insert(universe_.end(), b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    std::sort(universe_.begin(), universe_.end());
    if (std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end())
        throw ContractViolation("partition blocks must be pairwise disjoint");
}

Partition Partition::single_block(const std::vector<RowId>& universe) {
    if (universe.empty()) return Partition{};
    return Partition(std::vector<Block>{universe});
}

Partition Partition::discrete(const std::vector<RowId>& universe) {
    std::vector<Block> blocks;
    blocks.reserve(universe.size());
    for (auto id : universe) blocks.push_back(Block{id});
    return Partition(std::move(blocks));
}

// A comma anywhere switches the whole text to comma-separated ids; otherwise each digit is one id.
// A trailing comma is allowed so a discrete partition with wide ids stays unambiguous.
Partition Partition::parse(const std::string& text) {
    std::vector<Block> blocks;
    if (text.empty()) return Partition{};
    bool wide = text.find(',') != std::string::npos;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('|', start);
        if (end == std::string::npos) end = text.size();
        std::string part = text.substr(start, end - start);
        Block block;
        if (wide) {
            if (!part.empty() && part.back() == ',' && end == text.size()) part.pop_back();
            std::size_t s = 0;
            while (s <= part.size()) {
                auto e = part.find(',', s);
                if (e == std::string::npos) e = part.size();
                std::string num = part.substr(s, e - s);
                if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                    throw ContractViolation("bad partition text: " + text);
                block.push_back(RowId{static_cast<std::uint32_t>(std::stoul(num))});
                s = e + 1;
            }
        } else {
            for (char ch : part) {
                if (ch < '0' || ch > '9') throw ContractViolation("bad partition text: " + text);
                block.push_back(RowId{static_cast<std::uint32_t>(ch - '0')});
            }
        }
        if (block.empty()) throw ContractViolation("bad partition text: " + text);
        blocks.push_back(std::move(block));
        start = end + 1;
    }
    return Partition(std::move(blocks));
}

const Block* Partition::block_of(RowId id) const {
    for (const auto& b : blocks_)
        if (std::binary_search(b.begin(), b.end(), id)) return &b;
    return nullptr;
}

std::string blocks_to_string(const std::vector<Block>& blocks) {
    bool wide = false, grouped = false;
    for (const auto& b : blocks) {
        grouped = grouped || b.size() > 1;
        wide = wide || std::any_of(b.begin(), b.end(), [](RowId id) { return id.value > 9; });
    }
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += '|';
        for (std::size_t k = 0; k < blocks[i].size(); ++k) {
            if (wide && k) out += ',';
            out += std::to_string(blocks[i][k].value);
        }
    }
    if (wide && !grouped) out += ',';
    return out;
}

std::string Partition::to_string() const { return blocks_to_string(blocks_); }

bool finer_than(const Partition& p, const Partition& q) {
    require_same_universe(p, q);
    auto qidx = block_index(q);
    for (const auto& b : p.blocks()) {
        long target = qidx[b.front().value];
        for (auto id : b)
            if (qidx[id.value] != target) return false;
    }
    return true;
}

Partition product(const Partition& p, const Partition& q) {
    require_same_universe(p, q);
    auto qidx = block_index(q);
    std::vector<Block> out;
    for (const auto& b : p.blocks()) {
        std::map<long, Block> parts;
        for (auto id : b) parts[qidx[id.value]].push_back(id);
        for (auto& [_, part] : parts) out.push_back(std::move(part));
    }
    return Partition(std::move(out));
}

Block r_helper(RowId e, const std::vector<Block>& family) {
    Block out;
    for (const auto& x : family) {
        if (!std::binary_search(x.begin(), x.end(), e)) continue;
        Block merged;
        std::set_union(out.begin(), out.end(), x.begin(), x.end(), std::back_inserter(merged));
        out = std::move(merged);
    }
    return out;
}

Partition sum(const Partition& p, const Partition& q) {
    require_same_universe(p, q);
    std::vector<Block> family = p.blocks();
    family.insert(family.end(), q.blocks().begin(), q.blocks().end());
    auto current = maximal_sets(std::move(family));
    for (;;) {
        std::vector<Block> reached;
        reached.reserve(p.universe().size());
        for (auto e : p.universe()) reached.push_back(r_helper(e, current));
        auto next = maximal_sets(std::move(reached));
        if (next == current) break;
        current = std::move(next);
    }
    return Partition(std::move(current));
}

std::vector<RowId> reps(const Partition& p) {
    std::vector<RowId> out;
    out.reserve(p.size());
    for (const auto& b : p.blocks()) out.push_back(b.front());
    return out;
}

}  // namespace skylattice
