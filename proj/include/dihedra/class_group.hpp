#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dihedra/abelian.hpp"
#include "dihedra/forms.hpp"

namespace dihedra {

/// Explicit decomposition of the form class group of one discriminant into
/// cyclic factors: every reduced form gets coordinates with respect to a
/// basis of generators of the invariant factors.
class FormClassGroup {
public:
    /// `forms` must be exactly the reduced forms of one discriminant. Throws
    /// std::invalid_argument if composition leaves the set.
    explicit FormClassGroup(std::vector<QuadForm> forms);

    const std::vector<QuadForm> &forms() const { return forms_; }
    const AbelianGroup &structure() const { return structure_; }
    std::size_t order() const { return forms_.size(); }

    /// Generators of Z/d1, ..., Z/dk in invariant-factor order.
    const std::vector<QuadForm> &generators() const { return generators_; }

    /// Index of a reduced form in forms(), or nullopt if absent.
    std::optional<std::size_t> index_of(const QuadForm &f) const;

    /// Coordinates (c1, ..., ck) with f = prod gi^ci, 0 <= ci < di.
    const std::vector<i64> &coordinates(const QuadForm &f) const;

private:
    std::vector<QuadForm> forms_;
    std::unordered_map<u64, std::size_t> index_;
    AbelianGroup structure_;
    std::vector<QuadForm> generators_;
    std::vector<std::vector<i64>> coords_;
};

/// Invariant factors of the group formed by `forms` under composition.
AbelianGroup structure_from_forms(const std::vector<QuadForm> &forms);

struct GeneratorInfo {
    QuadForm form;
    i64 order = 1;
};

struct ClassGroupRecord {
    Discriminant disc{-3};
    u64 class_number = 1;
    AbelianGroup structure;
    std::vector<GeneratorInfo> generators;
    /// Set when disc is not fundamental (class group of a non-maximal order).
    bool non_fundamental = false;
};

ClassGroupRecord class_group(const Discriminant &d);

/// Class group plus the explicit decomposition used to build characters.
struct ClassGroupData {
    ClassGroupRecord record;
    FormClassGroup group;
};
ClassGroupData class_group_data(const Discriminant &d);

/// Read-through cache of (disc, h, invariant factors), persisted as CSV with
/// header `disc,h,invariant_factors`.
class ClassGroupCache {
public:
    ClassGroupCache() = default;
    explicit ClassGroupCache(std::filesystem::path path);

    /// Loads existing rows; a missing file is an empty cache.
    void load();
    /// Writes every row, ascending |D|.
    void save() const;

    std::optional<std::pair<u64, AbelianGroup>> find(i64 disc) const;
    void insert(i64 disc, u64 h, const AbelianGroup &g);

    /// Cached entry if present, otherwise computes and inserts.
    std::pair<u64, AbelianGroup> get(const Discriminant &d);

    std::size_t size() const { return rows_.size(); }
    bool dirty() const { return dirty_; }

private:
    std::filesystem::path path_;
    std::map<i64, std::pair<u64, AbelianGroup>, std::greater<>> rows_;
    bool dirty_ = false;
};

} // namespace dihedra
