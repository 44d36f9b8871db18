#include "skylattice/relation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "skylattice/errors.hpp"

namespace skylattice {

Relation::Relation(std::string name, std::vector<std::string> dim_names, CriterionNames criteria,
                   std::vector<Row> rows)
    : name_(std::move(name)), dim_names_(std::move(dim_names)), criteria_(std::move(criteria)) {
    tuples_.reserve(rows.size());
    std::uint32_t next = 1;
    for (auto& row : rows) {
        const std::size_t rownum = next;
        if (row.crits.size() != criteria_.size())
            throw ValueError("row " + std::to_string(rownum) + " has " + std::to_string(row.crits.size()) +
                                 " criterion values, expected " + std::to_string(criteria_.size()),
                             rownum, "");
        for (std::size_t i = 0; i < row.crits.size(); ++i) {
            if (!std::isfinite(row.crits[i]))
                throw ValueError("row " + std::to_string(rownum) + ", column " + criteria_[i] +
                                     ": criterion values must be finite",
                                 rownum, criteria_[i]);
        }
        if (row.dims.size() != dim_names_.size())
            throw ValueError("row " + std::to_string(rownum) + " has the wrong number of dimension values",
                             rownum, "");
        tuples_.push_back(Tuple{RowId{next++}, std::move(row.dims), std::move(row.crits)});
    }
}

const Tuple& Relation::tuple(RowId id) const {
    if (!contains(id)) throw ContractViolation("row id " + std::to_string(id.value) + " not in relation");
    return tuples_[id.value - 1];
}

std::vector<RowId> Relation::tid() const {
    std::vector<RowId> out;
    out.reserve(tuples_.size());
    for (const auto& t : tuples_) out.push_back(t.rowid);
    return out;
}

bool operator==(const Relation& a, const Relation& b) {
    if (a.name_ != b.name_ || a.dim_names_ != b.dim_names_ || a.criteria_.names() != b.criteria_.names())
        return false;
    if (a.tuples_.size() != b.tuples_.size()) return false;
    for (std::size_t i = 0; i < a.tuples_.size(); ++i) {
        const auto& x = a.tuples_[i];
        const auto& y = b.tuples_[i];
        if (x.rowid != y.rowid || x.dims != y.dims || x.crits != y.crits) return false;
    }
    return true;
}

std::vector<double> project(const Tuple& t, CriterionSet c) {
    std::vector<double> out;
    out.reserve(c.size());
    c.for_each([&](CriterionId id) { out.push_back(t.crits[id]); });
    return out;
}

bool same_projection(const Tuple& a, const Tuple& b, CriterionSet c) {
    for (auto m = c.mask(); m != 0; m &= m - 1) {
        auto id = static_cast<std::size_t>(std::countr_zero(m));
        if (a.crits[id] != b.crits[id]) return false;
    }
    return true;
}

namespace {

// One CSV record; handles quoted fields and doubled quotes. Returns false at EOF.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    std::string field;
    bool quoted = false;
    bool any = false;
    char ch;
    while (in.get(ch)) {
        any = true;
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get(ch);
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n') {
            break;
        } else if (ch != '\r') {
            field += ch;
        }
    }
    if (!any) return false;
    fields.push_back(std::move(field));
    return true;
}

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

bool blank(const std::vector<std::string>& fields) {
    return std::all_of(fields.begin(), fields.end(), [](const std::string& f) { return trim(f).empty(); });
}

std::string quote_if_needed(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

Relation parse_csv(std::istream& in, std::string name, const std::vector<std::string>& criteria,
                   const std::vector<std::string>& maximize) {
    std::vector<std::string> header;
    if (!read_record(in, header)) throw SchemaError("missing header row");
    if (!header.empty() && header[0].rfind("\xEF\xBB\xBF", 0) == 0) header[0].erase(0, 3);
    for (auto& h : header) h = trim(h);

    std::unordered_map<std::string, std::size_t> column_of;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (!column_of.emplace(header[i], i).second) throw SchemaError("duplicate column name: " + header[i]);
    }

    CriterionNames names(criteria);
    std::vector<std::size_t> crit_cols;
    std::vector<bool> negate;
    for (const auto& c : criteria) {
        auto it = column_of.find(c);
        if (it == column_of.end()) throw SchemaError("missing column: " + c);
        crit_cols.push_back(it->second);
        negate.push_back(std::find(maximize.begin(), maximize.end(), c) != maximize.end());
    }
    for (const auto& m : maximize) {
        if (std::find(criteria.begin(), criteria.end(), m) == criteria.end())
            throw SchemaError("maximized column is not a declared criterion: " + m);
    }

    std::unordered_set<std::size_t> crit_set(crit_cols.begin(), crit_cols.end());
    std::vector<std::size_t> dim_cols;
    std::vector<std::string> dim_names;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (!crit_set.count(i)) {
            dim_cols.push_back(i);
            dim_names.push_back(header[i]);
        }
    }

    std::vector<Row> rows;
    std::vector<std::string> fields;
    std::size_t rownum = 0;
    while (read_record(in, fields)) {
        if (blank(fields)) continue;
        ++rownum;
        if (fields.size() != header.size())
            throw ValueError("row " + std::to_string(rownum) + " has " + std::to_string(fields.size()) +
                                 " fields, header has " + std::to_string(header.size()),
                             rownum, "");
        Row row;
        for (std::size_t k = 0; k < crit_cols.size(); ++k) {
            std::string cell = trim(fields[crit_cols[k]]);
            double v = 0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(v))
                throw ValueError("row " + std::to_string(rownum) + ", column " + criteria[k] +
                                     ": not a finite number: '" + cell + "'",
                                 rownum, criteria[k]);
            row.crits.push_back(negate[k] ? -v : v);
        }
        for (auto c : dim_cols) row.dims.push_back(fields[c]);
        rows.push_back(std::move(row));
    }
    return Relation(std::move(name), std::move(dim_names), std::move(names), std::move(rows));
}

Relation load_csv(const std::filesystem::path& path, const std::vector<std::string>& criteria,
                  const std::vector<std::string>& maximize) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open " + path.string());
    return parse_csv(in, path.stem().string(), criteria, maximize);
}

std::string format_value(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const Relation& r) {
    bool first = true;
    auto sep = [&] {
        if (!first) out << ',';
        first = false;
    };
    for (const auto& d : r.dim_names()) {
        sep();
        out << quote_if_needed(d);
    }
    for (const auto& c : r.criteria().names()) {
        sep();
        out << quote_if_needed(c);
    }
    out << '\n';
    for (const auto& t : r.tuples()) {
        first = true;
        for (const auto& d : t.dims) {
            sep();
            out << quote_if_needed(d);
        }
        for (double v : t.crits) {
            sep();
            out << format_value(v);
        }
        out << '\n';
    }
}

}  // namespace skylattice
