#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skylattice/errors.hpp"
#include "skylattice/galois.hpp"
#include "skylattice/partition.hpp"
#include "skylattice/relation.hpp"

namespace skylattice {

/// (C, π) with C = f(π) and π = g(C).
struct AgreeConcept {
    CriterionSet intension;
    Partition extension;

    bool operator==(const AgreeConcept&) const = default;
};

/// (C, Π-SKY_C(g(C))): the agree concept's partition restricted to skyline blocks.
struct SkylineConcept {
    CriterionSet intension;
    std::vector<Block> sky_blocks;

    /// Union of the stored blocks, ascending.
    std::vector<RowId> rows() const;

    bool operator==(const SkylineConcept&) const = default;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Concepts in canonical intension order plus the cover relation on intensions.
/// Edges point from the smaller intension to the larger one.
template <class Concept>
struct ConceptLattice {
    std::vector<Concept> concepts;
    std::vector<Edge> edges;
    std::size_t bottom = 0;
    std::size_t top = 0;

    std::optional<std::size_t> index_of(CriterionSet intension) const {
        for (std::size_t i = 0; i < concepts.size(); ++i)
            if (concepts[i].intension == intension) return i;
        return std::nullopt;
    }

    const Concept& at(CriterionSet intension) const {
        auto i = index_of(intension);
        if (!i) throw ContractViolation("no concept with that intension");
        return concepts[*i];
    }
};

using AgreeLattice = ConceptLattice<AgreeConcept>;
using SkylineLattice = ConceptLattice<SkylineConcept>;

/// Cover edges (transitive reduction of ⊂) among `intensions`, which must be in canonical order.
std::vector<Edge> cover_edges(const std::vector<CriterionSet>& intensions);

/// One concept per closed criterion set.
AgreeLattice build_agree_lattice(const Relation& r);

/// Same nodes and edges as the agree lattice, each extension filtered by Π-SKY.
SkylineLattice build_skyline_lattice(const Relation& r);
SkylineLattice build_skyline_lattice(const Relation& r, const AgreeLattice& agree);

/// ⋀P = (⋂ intensions, h'(Σ extensions)). Throws on an empty P.
AgreeConcept concept_meet(std::span<const AgreeConcept> concepts, const Relation& r);

/// ⋁P = (h(⋃ intensions), ∏ extensions). Throws on an empty P.
AgreeConcept concept_join(std::span<const AgreeConcept> concepts, const Relation& r);

/// Meet and join of the empty family.
AgreeConcept lattice_top(const Relation& r);
AgreeConcept lattice_bottom(const Relation& r);

std::string concept_label(const AgreeConcept& c, const CriterionNames& names);
std::string concept_label(const SkylineConcept& c, const CriterionNames& names);

/// Graphviz digraph, nodes in canonical order, edges bottom-to-top.
std::string export_dot(const AgreeLattice& l, const CriterionNames& names);
std::string export_dot(const SkylineLattice& l, const CriterionNames& names);

}  // namespace skylattice
