#include "apery/semigroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace apery {

Int AperyTable::max_element() const {
    return *std::max_element(elements.begin(), elements.end());
}

bool AperyTable::contains(Int x) const {
    if (x < 0) return false;
    const Int m = size();
    return elements[static_cast<std::size_t>(x % m)] == x;
}

Int AperyTable::order_of(Int omega) const {
    if (!contains(omega)) throw NotInApery(omega);
    return orders[static_cast<std::size_t>(omega % size())];
}

std::vector<Int> AperyTable::sorted() const {
    std::vector<Int> out = elements;
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Forward DP over the generators on [0, bound]:
//   ord[0] = 0,  ord[x] = 1 + max{ ord[x-g] : g generator, x-g in S },
// and ord[x] = -1 when no generator reaches back into S.
void fill_order_table(const std::vector<Int>& gens, std::vector<Int>& ord, Int bound) {
    std::size_t old = ord.size();
    ord.resize(static_cast<std::size_t>(bound) + 1, -1);
    if (old == 0) {
        ord[0] = 0;
        old = 1;
    }
    for (std::size_t x = old; x < ord.size(); ++x) {
        Int best = -1;
        for (Int g : gens) {
            if (static_cast<Int>(x) < g) break;  // gens sorted ascending
            Int prev = ord[x - static_cast<std::size_t>(g)];
            if (prev >= 0 && prev + 1 > best) best = prev + 1;
        }
        ord[x] = best;
    }
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<Int> raw) {
    return from_generators(std::span<const Int>(raw.begin(), raw.size()));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> raw) {
    if (raw.empty()) throw EmptyInput();
    for (Int g : raw) {
        if (g < 1) throw Error("generators must be positive, got " + std::to_string(g));
    }
    Int g = 0;
    for (Int v : raw) g = std::gcd(g, v);
    if (g != 1) {
        throw NonCofinite("gcd of generators is " + std::to_string(g) +
                          "; the complement in N would be infinite");
    }

    std::vector<Int> sorted(raw.begin(), raw.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    // Minimalization: drop any generator representable from the kept smaller
    // ones, i.e. keep exactly the minimal elements of (S \ {0}, <=_S).
    std::vector<Int> kept;
    for (Int cand : sorted) {
        if (!kept.empty()) {
            // membership of cand in <kept> by the same forward DP
            std::vector<bool> member(static_cast<std::size_t>(cand) + 1, false);
            member[0] = true;
            for (Int x = kept.front(); x <= cand; ++x) {
                for (Int k : kept) {
                    if (k > x) break;
                    if (member[static_cast<std::size_t>(x - k)]) {
                        member[static_cast<std::size_t>(x)] = true;
                        break;
                    }
                }
            }
            if (member[static_cast<std::size_t>(cand)]) continue;
        }
        kept.push_back(cand);
    }

    NumericalSemigroup s;
    s.gens_ = std::move(kept);
    s.table_mutex_ = std::make_unique<std::shared_mutex>();

    // Find the Frobenius number: once m consecutive members appear, every
    // larger integer is a member too, so f is the largest gap before that run.
    const Int m = s.gens_.front();
    Int bound = std::max<Int>(2 * s.gens_.back(), 64);
    Int frob = -2;
    while (frob == -2) {
        fill_order_table(s.gens_, s.ord_, bound);
        Int run = 0;
        Int run_end = -1;
        for (Int x = 0; x <= bound; ++x) {
            run = (s.ord_[static_cast<std::size_t>(x)] >= 0) ? run + 1 : 0;
            if (run == m) {
                run_end = x;
                break;
            }
        }
        if (run_end < 0) {
            bound *= 2;
            continue;
        }
        frob = -1;
        for (Int y = run_end - m; y >= 0; --y) {
            if (s.ord_[static_cast<std::size_t>(y)] < 0) {
                frob = y;
                break;
            }
        }
    }
    s.frobenius_ = frob;

    // Keep the table at least up to f + 2m + 2 so Apery and the common
    // order queries never need to grow it.
    const Int base_bound = std::max<Int>(frob + 2 * m + 2, bound);
    fill_order_table(s.gens_, s.ord_, base_bound);

    s.genus_ = 0;
    for (Int x = 0; x <= frob; ++x) {
        if (s.ord_[static_cast<std::size_t>(x)] < 0) ++s.genus_;
    }

    s.apery_.elements.assign(static_cast<std::size_t>(m), -1);
    s.apery_.orders.assign(static_cast<std::size_t>(m), -1);
    s.apery_.elements[0] = 0;
    s.apery_.orders[0] = 0;
    Int found = 1;
    for (Int x = 1; x <= frob + m && found < m; ++x) {
        if (s.ord_[static_cast<std::size_t>(x)] < 0) continue;
        std::size_t cls = static_cast<std::size_t>(x % m);
        if (s.apery_.elements[cls] < 0) {
            s.apery_.elements[cls] = x;
            s.apery_.orders[cls] = s.ord_[static_cast<std::size_t>(x)];
            ++found;
        }
    }
    if (found != m) throw InternalInconsistency("Apery table incomplete");
    if (s.apery_.max_element() != frob + m)
        throw InternalInconsistency("max Apery element != f + m");
    return s;
}

NumericalSemigroup::NumericalSemigroup(const NumericalSemigroup& other)
    : gens_(other.gens_),
      frobenius_(other.frobenius_),
      genus_(other.genus_),
      apery_(other.apery_),
      table_mutex_(std::make_unique<std::shared_mutex>()) {
    std::shared_lock lock(*other.table_mutex_);
    ord_ = other.ord_;
}

NumericalSemigroup& NumericalSemigroup::operator=(const NumericalSemigroup& other) {
    if (this == &other) return *this;
    NumericalSemigroup tmp(other);
    *this = std::move(tmp);
    return *this;
}

void NumericalSemigroup::grow_table_locked(Int bound) const {
    fill_order_table(gens_, ord_, bound);
}

Int NumericalSemigroup::order_lookup(Int x) const {
    if (x < 0) return -1;
    {
        std::shared_lock lock(*table_mutex_);
        if (static_cast<std::size_t>(x) < ord_.size()) return ord_[static_cast<std::size_t>(x)];
    }
    std::unique_lock lock(*table_mutex_);
    if (static_cast<std::size_t>(x) >= ord_.size()) grow_table_locked(x);
    return ord_[static_cast<std::size_t>(x)];
}

void NumericalSemigroup::ensure_order_table(Int bound) const {
    if (bound < 0) return;
    std::unique_lock lock(*table_mutex_);
    if (static_cast<std::size_t>(bound) >= ord_.size()) grow_table_locked(bound);
}

bool NumericalSemigroup::contains(Int x) const {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return order_lookup(x) >= 0;
}

Int NumericalSemigroup::order(Int s) const {
    Int o = order_lookup(s);
    if (o < 0) throw NotInSemigroup(s);
    return o;
}

Int frobenius(const NumericalSemigroup& s) { return s.frobenius(); }
AperyTable apery_set(const NumericalSemigroup& s) { return s.apery_set(); }

}  // namespace apery
