#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <shared_mutex>
#include <span>
#include <vector>

#include "apery/errors.hpp"

namespace apery {

using Int = std::int64_t;

/// The minimal element of S in each congruence class mod the multiplicity,
/// together with their orders. elements[i] is the class of i mod m.
struct AperyTable {
    std::vector<Int> elements;  // elements[0] == 0, elements[i] == i (mod m)
    std::vector<Int> orders;

    Int size() const { return static_cast<Int>(elements.size()); }
    Int max_element() const;  // always f + m
    bool contains(Int x) const;
    Int order_of(Int omega) const;  // throws NotInApery
    std::vector<Int> sorted() const;
};

/**
 * A numerical semigroup: a cofinite additive submonoid of the nonnegative
 * integers, held as its minimal generating set g_1 < ... < g_nu plus lazily
 * grown membership/order tables.
 *
 * Logically immutable after construction. The internal table is guarded by a
 * shared mutex so concurrent readers see a consistent state; copies start
 * from a snapshot of the source table.
 */
class NumericalSemigroup {
public:
    // Reduces `raw` to the minimal generating set. Throws EmptyInput,
    // NonCofinite (gcd != 1), or Error on nonpositive entries.
    static NumericalSemigroup from_generators(std::span<const Int> raw);
    static NumericalSemigroup from_generators(std::initializer_list<Int> raw);

    NumericalSemigroup(const NumericalSemigroup& other);
    NumericalSemigroup& operator=(const NumericalSemigroup& other);
    NumericalSemigroup(NumericalSemigroup&&) noexcept = default;
    NumericalSemigroup& operator=(NumericalSemigroup&&) noexcept = default;

    const std::vector<Int>& generators() const { return gens_; }
    Int multiplicity() const { return gens_.front(); }    // m
    int embedding_dimension() const { return static_cast<int>(gens_.size()); }  // nu
    Int frobenius() const { return frobenius_; }          // f, -1 for S = N
    Int genus() const { return genus_; }                  // |N \ S|

    bool contains(Int x) const;
    Int order(Int s) const;  // throws NotInSemigroup
    const AperyTable& apery_set() const { return apery_; }

    // Grows the order table to cover [0, bound]; useful to pre-extend
    // before sharing across threads.
    void ensure_order_table(Int bound) const;

    bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }

private:
    NumericalSemigroup() = default;

    std::vector<Int> gens_;
    Int frobenius_ = -1;
    Int genus_ = 0;
    AperyTable apery_;

    // ord_[x] = order of x, or -1 when x is a gap. Append-only.
    mutable std::vector<Int> ord_;
    mutable std::unique_ptr<std::shared_mutex> table_mutex_;

    void grow_table_locked(Int bound) const;
    Int order_lookup(Int x) const;  // -1 for non-members, extends table on demand
};

Int frobenius(const NumericalSemigroup& s);
AperyTable apery_set(const NumericalSemigroup& s);

}  // namespace apery
