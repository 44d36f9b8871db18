#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "skylattice/criteria.hpp"

namespace skylattice {

/// Tuple identifier. Assigned 1..n in ingestion order.
struct RowId {
    std::uint32_t value = 0;

    constexpr auto operator<=>(const RowId&) const = default;
};

using Block = std::vector<RowId>;

struct Tuple {
    RowId rowid;
    std::vector<std::string> dims;  // opaque, never compared
    std::vector<double> crits;      // one finite value per declared criterion, minimized
};

/// Raw row handed to the Relation constructor; ids are assigned on construction.
struct Row {
    std::vector<std::string> dims;
    std::vector<double> crits;
};

/// Immutable relation over d <= 63 minimized criteria.
class Relation {
public:
    Relation() = default;
    Relation(std::string name, std::vector<std::string> dim_names, CriterionNames criteria,
             std::vector<Row> rows);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& dim_names() const { return dim_names_; }
    const CriterionNames& criteria() const { return criteria_; }
    std::size_t degree() const { return criteria_.size(); }
    CriterionSet all_criteria() const { return CriterionSet::full(degree()); }

    std::size_t size() const { return tuples_.size(); }
    bool empty() const { return tuples_.empty(); }
    const std::vector<Tuple>& tuples() const { return tuples_; }

    bool contains(RowId id) const { return id.value >= 1 && id.value <= tuples_.size(); }
    const Tuple& tuple(RowId id) const;

    /// Tid(r), ascending.
    std::vector<RowId> tid() const;

    friend bool operator==(const Relation&, const Relation&);

private:
    std::string name_;
    std::vector<std::string> dim_names_;
    CriterionNames criteria_;
    std::vector<Tuple> tuples_;
};

/// Values of `t` at the members of `c`, ascending criterion id.
std::vector<double> project(const Tuple& t, CriterionSet c);

/// True when `a` and `b` agree on every criterion of `c`.
bool same_projection(const Tuple& a, const Tuple& b, CriterionSet c);

/// Reads a comma-separated file with a header row. Columns listed in `criteria`
/// become criterion columns in that order; all other columns are kept as opaque
/// dimensions. Columns in `maximize` are negated so every criterion is minimized.
Relation load_csv(const std::filesystem::path& path, const std::vector<std::string>& criteria,
                  const std::vector<std::string>& maximize = {});

Relation parse_csv(std::istream& in, std::string name, const std::vector<std::string>& criteria,
                   const std::vector<std::string>& maximize = {});

/// Emits dimensions then criteria, using the stored (already minimized) values.
void write_csv(std::ostream& out, const Relation& r);

/// Shortest text that parses back to the same double.
std::string format_value(double v);

}  // namespace skylattice
