#include "apery/representations.hpp"

#include <algorithm>

namespace apery {

bool lex_less(const RepresentationTuple& a, const RepresentationTuple& b) {
    return a.coefficients < b.coefficients;
}

bool grlex_less(const RepresentationTuple& a, const RepresentationTuple& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.coefficients < b.coefficients;
}

std::string render(const RepresentationTuple& t, const NumericalSemigroup& s,
                   bool include_g1) {
    const auto& gens = s.generators();
    const std::size_t offset = include_g1 ? 0 : 1;
    std::string out;
    for (std::size_t i = 0; i < t.coefficients.size(); ++i) {
        Int c = t.coefficients[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (c > 1) out += std::to_string(c) + "*";
        out += std::to_string(gens[offset + i]);
    }
    if (out.empty()) out = "0";
    return out;
}

namespace {

// Depth-first over lambda_2 descending, then lambda_3, ...; the last
// coordinate is forced by divisibility. Output is lex-descending, so the
// first emitted tuple is the lex maximum.
void enumerate(std::span<const Int> gens, std::size_t idx, Int remaining,
               std::vector<Int>& partial, Int partial_len,
               std::vector<RepresentationTuple>& out, Int target) {
    if (idx + 1 == gens.size()) {
        if (remaining % gens[idx] == 0) {
            partial.push_back(remaining / gens[idx]);
            out.push_back({partial, target, partial_len + remaining / gens[idx]});
            partial.pop_back();
        }
        return;
    }
    for (Int c = remaining / gens[idx]; c >= 0; --c) {
        partial.push_back(c);
        enumerate(gens, idx + 1, remaining - c * gens[idx], partial,
                  partial_len + c, out, target);
        partial.pop_back();
    }
}

}  // namespace

RepresentationSet representations_of(const NumericalSemigroup& s, Int target,
                                     bool include_g1) {
    const Int ord = s.order(target);  // throws NotInSemigroup
    RepresentationSet set;
    set.target = target;
    set.include_g1 = include_g1;

    const auto& gens = s.generators();
    std::span<const Int> range(gens);
    if (!include_g1) range = range.subspan(1);

    if (target == 0) {
        set.all.push_back({std::vector<Int>(range.size(), 0), 0, 0});
    } else if (!range.empty()) {
        std::vector<Int> partial;
        enumerate(range, 0, target, partial, 0, set.all, target);
    }
    for (const auto& t : set.all) {
        if (t.length == ord) set.maximal.push_back(t);
    }
    return set;
}

std::vector<RepresentationTuple> maximal_representations(const NumericalSemigroup& s,
                                                         Int omega) {
    if (!s.apery_set().contains(omega)) throw NotInApery(omega);
    return representations_of(s, omega, /*include_g1=*/false).maximal;
}

RepresentationTuple lexmax_maximal_representation(const NumericalSemigroup& s, Int omega) {
    auto maximal = maximal_representations(s, omega);
    if (maximal.empty()) throw InternalInconsistency("Apery element without maximal representation");
    return maximal.front();  // enumeration is lex-descending
}

bool is_unique_maximal_expression(const NumericalSemigroup& s) {
    for (Int omega : s.apery_set().elements) {
        if (maximal_representations(s, omega).size() != 1) return false;
    }
    return true;
}

}  // namespace apery
