#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "alglen/algebra.hpp"
#include "alglen/errors.hpp"
#include "alglen/field.hpp"
#include "alglen/linalg.hpp"
#include "alglen/parallel.hpp"

namespace alglen {

/// A product of generators, stored as indices into the generating set.
/// The empty word denotes the algebra unit and has length 0.
struct Word {
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }

  friend bool operator==(const Word&, const Word&) = default;
};

template <FieldCtx F>
struct GeneratingSet {
  const Algebra<F>* alg = nullptr;
  std::vector<Vec<F>> gens;
};

template <FieldCtx F>
GeneratingSet<F> make_generating_set(const Algebra<F>& alg,
                                     std::vector<Element<F>> elems) {
  if (elems.empty()) throw Error("generating set must be non-empty");
  GeneratingSet<F> s;
  s.alg = &alg;
  for (auto& e : elems) {
    if (e.algebra() != &alg) {
      throw AlgebraMismatch("generator from a different algebra");
    }
    s.gens.push_back(e.coords());
  }
  return s;
}

template <FieldCtx F>
Vec<F> element_of_word(const GeneratingSet<F>& s, const Word& w) {
  Vec<F> acc = s.alg->unit();
  for (int letter : w.letters) {
    if (letter < 0 || letter >= static_cast<int>(s.gens.size())) {
      throw Error("word letter out of range");
    }
    acc = s.alg->mul(acc, s.gens[letter]);
  }
  return acc;
}

template <FieldCtx F>
struct LevelWord {
  Word word;
  Vec<F> coords;
};

/// Result of running the span filtration L_0 <= L_1 <= ... for a set S.
/// dims[i] = dim L_i; entries are recorded only while the dimension grows.
/// new_words[i] lists the words whose insertion grew level i (level 0 is
/// the empty word). When S generates, length is the first level whose
/// span is the whole algebra.
template <FieldCtx F>
struct FiltrationReport {
  std::vector<int> dims;
  std::vector<std::vector<LevelWord<F>>> new_words;
  bool generates = false;
  std::optional<int> length;
  int stabilized_dim = 0;
  bool truncated = false;  // max_level hit before stabilizing
};

/// Computes the filtration by the level rule: candidates for level k+1 are
/// g*w over g in S and w among the new words of level k. Left products
/// suffice: a word of length k+1 is g*w' with w' of length k, and modulo
/// L_k every such w' is a combination of new words of length <= k, whose
/// shorter-word products already lie in L_k.
template <FieldCtx F>
FiltrationReport<F> filtrate(const GeneratingSet<F>& s,
                             std::optional<int> max_level = {}) {
  const Algebra<F>& alg = *s.alg;
  const int dim_a = alg.dim();
  const int cap = max_level.value_or(dim_a);
  FiltrationReport<F> report;
  Subspace<F> span(alg.field(), dim_a);
  span.insert(alg.unit());
  report.dims.push_back(1);
  report.new_words.push_back({LevelWord<F>{Word{}, alg.unit()}});
  if (span.dim() == dim_a) {
    report.generates = true;
    report.length = 0;
    report.stabilized_dim = 1;
    return report;
  }
  for (int level = 1;; ++level) {
    if (level > cap) {
      report.truncated = true;
      break;
    }
    std::vector<LevelWord<F>> grown;
    for (const auto& w : report.new_words.back()) {
      for (std::size_t g = 0; g < s.gens.size(); ++g) {
        Vec<F> cand = alg.mul(s.gens[g], w.coords);
        if (span.insert(cand)) {
          Word word;
          word.letters.reserve(w.word.letters.size() + 1);
          word.letters.push_back(static_cast<int>(g));
          word.letters.insert(word.letters.end(), w.word.letters.begin(),
                              w.word.letters.end());
          grown.push_back(LevelWord<F>{std::move(word), std::move(cand)});
        }
      }
    }
    if (grown.empty()) break;
    report.dims.push_back(span.dim());
    report.new_words.push_back(std::move(grown));
    if (span.dim() == dim_a) {
      report.generates = true;
      report.length = level;
      break;
    }
  }
  report.stabilized_dim = report.dims.back();
  return report;
}

/// The span L_k(S), reconstructed from a (possibly shorter) filtration.
template <FieldCtx F>
Subspace<F> level_span(const GeneratingSet<F>& s, int k) {
  FiltrationReport<F> report = filtrate(s, k);
  Subspace<F> span(s.alg->field(), s.alg->dim());
  for (const auto& level : report.new_words) {
    for (const auto& w : level) span.insert(w.coords);
  }
  return span;
}

/// A word of length i is reducible when its element lies in L_{i-1}(S).
template <FieldCtx F>
bool is_reducible(const Word& w, const GeneratingSet<F>& s) {
  if (w.length() < 1) throw Error("reducibility needs a word of length >= 1");
  return level_span(s, w.length() - 1).contains(element_of_word(s, w));
}

/// Words u, v of equal length i are equivalent when u - alpha*v lies in
/// L_{i-1}(S) for some nonzero alpha: both residues vanish, or both are
/// nonzero and proportional.
template <FieldCtx F>
bool are_equivalent(const Word& u, const Word& v, const GeneratingSet<F>& s) {
  if (u.length() != v.length() || u.length() < 1) {
    throw LengthMismatch("equivalence needs two words of equal length >= 1");
  }
  const F& f = s.alg->field();
  Subspace<F> span = level_span(s, u.length() - 1);
  Vec<F> ru = span.reduce(element_of_word(s, u));
  Vec<F> rv = span.reduce(element_of_word(s, v));
  const bool zu = vec_is_zero(f, ru);
  const bool zv = vec_is_zero(f, rv);
  if (zu || zv) return zu && zv;
  int lead = 0;
  while (f.is_zero(rv[lead])) ++lead;
  const auto alpha = f.div(ru[lead], rv[lead]);
  if (f.is_zero(alpha)) return false;
  return ru == vec_scaled(f, rv, alpha);
}

/// dims[k] - dims[k-1] for k = 1..l(S); the jumps sum to dim A - 1.
template <FieldCtx F>
std::vector<int> dim_jump_profile(const FiltrationReport<F>& report) {
  if (!report.generates) {
    throw NotGenerating("jump profile needs a generating filtration");
  }
  std::vector<int> jumps;
  for (std::size_t k = 1; k < report.dims.size(); ++k) {
    jumps.push_back(report.dims[k] - report.dims[k - 1]);
  }
  return jumps;
}

template <FieldCtx F>
using FiltrationObserver = std::function<void(const FiltrationReport<F>&)>;

/// Outcome of a search for long generating sets. `best` is exact for the
/// exhaustive search and a lower bound for the sampled one.
template <FieldCtx F>
struct LengthSearchResult {
  std::optional<int> best;
  std::vector<std::int64_t> witness_indices;  // element enumeration indices
  std::vector<Vec<F>> witness;
  bool exact = false;
  std::int64_t subsets_examined = 0;
};

namespace detail {

template <FieldCtx F>
struct SubsetSearchState {
  const Algebra<F>* alg;
  int cap;
  std::int64_t count;
  std::optional<int> best;
  std::vector<std::int64_t> best_indices;
  std::int64_t examined = 0;
  const FiltrationObserver<F>* observer;

  void visit(std::vector<std::int64_t>& indices, GeneratingSet<F>& s) {
    FiltrationReport<F> report = filtrate(s);
    ++examined;
    if (observer && *observer) (*observer)(report);
    if (report.generates) {
      const int l = *report.length;
      if (!best || l > *best || (l == *best && indices < best_indices)) {
        best = l;
        best_indices = indices;
      }
    }
    if (static_cast<int>(indices.size()) >= cap) return;
    for (std::int64_t next = indices.back() + 1; next < count; ++next) {
      indices.push_back(next);
      s.gens.push_back(alg->element_from_index(next));
      visit(indices, s);
      indices.pop_back();
      s.gens.pop_back();
    }
  }
};

inline BigInt subset_count(std::int64_t n, int cap) {
  BigInt total = 0;
  BigInt choose = 1;
  for (int k = 1; k <= cap && k <= n; ++k) {
    choose = choose * (n - k + 1) / k;
    total += choose;
  }
  return total;
}

}  // namespace detail

/// Exact l(A) over a finite field: filtrates every subset of cardinality
/// <= min(max_card, dim A) and maximizes l(S) over the generating ones.
/// Capping the cardinality at dim A loses nothing: a larger set has a
/// generator inside the span of 1 and the others, and removing it leaves
/// the filtration unchanged level by level. Witness ties break toward the
/// lexicographically least index set, so the result does not depend on
/// scheduling.
template <FieldCtx F>
LengthSearchResult<F> algebra_length_exhaustive(
    const Algebra<F>& alg, int max_card,
    std::int64_t budget = std::int64_t{1} << 20, int threads = worker_count(),
    const FiltrationObserver<F>& observer = {}) {
  if (max_card < 1) throw Error("max_card must be >= 1");
  const std::int64_t count = alg.element_count(budget);
  const int cap = std::min(max_card, alg.dim());
  const BigInt total = detail::subset_count(count, cap);
  if (total > budget) {
    throw BudgetExceeded("exhaustive search over " + total.str() +
                         " subsets exceeds budget " + std::to_string(budget));
  }
  const int chunk_count =
      threads > 1 ? static_cast<int>(std::min<std::int64_t>(count, threads * 8))
                  : 1;
  const std::int64_t chunk = (count + chunk_count - 1) / chunk_count;
  std::vector<detail::SubsetSearchState<F>> slots(
      static_cast<std::size_t>(chunk_count),
      detail::SubsetSearchState<F>{&alg, cap, count, {}, {}, 0, &observer});
  parallel_tasks(chunk_count, threads, [&](std::int64_t c) {
    const std::int64_t lo = c * chunk;
    const std::int64_t hi = std::min(count, lo + chunk);
    for (std::int64_t first = lo; first < hi; ++first) {
      std::vector<std::int64_t> indices{first};
      GeneratingSet<F> s;
      s.alg = &alg;
      s.gens.push_back(alg.element_from_index(first));
      slots[c].visit(indices, s);
    }
  });
  LengthSearchResult<F> result;
  result.exact = true;
  for (const auto& slot : slots) {
    result.subsets_examined += slot.examined;
    if (slot.best && (!result.best || *slot.best > *result.best ||
                      (*slot.best == *result.best &&
                       slot.best_indices < result.witness_indices))) {
      result.best = slot.best;
      result.witness_indices = slot.best_indices;
    }
  }
  for (std::int64_t idx : result.witness_indices) {
    result.witness.push_back(alg.element_from_index(idx));
  }
  return result;
}

/// Stochastic lower bound for l(A): filtrates `trials` random subsets with
/// cardinality in [card_lo, card_hi]. Each trial derives its own RNG from
/// (seed, trial), so results are reproducible and merge deterministically.
template <FieldCtx F>
LengthSearchResult<F> algebra_length_sampled(
    const Algebra<F>& alg, std::int64_t trials, int card_lo, int card_hi,
    std::uint64_t seed, int threads = worker_count(),
    const FiltrationObserver<F>& observer = {}) {
  if (card_lo < 1 || card_hi < card_lo) throw Error("bad cardinality range");
  const F& f = alg.field();
  const auto field_size = f.size();
  std::optional<std::int64_t> count;
  if (field_size) {
    count = alg.element_count(std::numeric_limits<std::int64_t>::max() / 2);
  }
  struct Slot {
    std::optional<int> best;
    std::int64_t best_trial = -1;
    std::vector<std::int64_t> witness_indices;
    std::vector<Vec<F>> witness;
  };
  const int chunk_count = threads > 1 ? threads * 8 : 1;
  const std::int64_t chunk = trials > 0 ? (trials + chunk_count - 1) / chunk_count : 0;
  std::vector<Slot> slots(chunk_count);
  auto run_trial = [&](std::int64_t t, Slot& local) {
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (t + 1)));
    int card = card_lo == card_hi
                   ? card_lo
                   : static_cast<int>(std::uniform_int_distribution<int>(
                         card_lo, card_hi)(rng));
    GeneratingSet<F> s;
    s.alg = &alg;
    std::vector<std::int64_t> indices;
    if (count) {
      if (card > *count) card = static_cast<int>(*count);
      std::set<std::int64_t> chosen;
      std::uniform_int_distribution<std::int64_t> dist(0, *count - 1);
      while (static_cast<int>(chosen.size()) < card) chosen.insert(dist(rng));
      for (std::int64_t idx : chosen) {
        indices.push_back(idx);
        s.gens.push_back(alg.element_from_index(idx));
      }
    } else {
      while (static_cast<int>(s.gens.size()) < card) {
        Vec<F> v(alg.dim(), f.zero());
        for (auto& x : v) x = f.random(rng);
        if (std::find(s.gens.begin(), s.gens.end(), v) == s.gens.end()) {
          s.gens.push_back(std::move(v));
        }
      }
    }
    FiltrationReport<F> report = filtrate(s);
    if (observer) observer(report);
    if (report.generates) {
      const int l = *report.length;
      if (!local.best || l > *local.best) {
        local.best = l;
        local.best_trial = t;
        local.witness_indices = std::move(indices);
        local.witness = std::move(s.gens);
      }
    }
  };
  parallel_tasks(chunk_count, threads, [&](std::int64_t c) {
    const std::int64_t lo = c * chunk;
    const std::int64_t hi = std::min(trials, lo + chunk);
    for (std::int64_t t = lo; t < hi; ++t) run_trial(t, slots[c]);
  });
  LengthSearchResult<F> result;
  result.exact = false;
  result.subsets_examined = trials;
  std::int64_t best_trial = -1;
  for (auto& slot : slots) {
    if (slot.best &&
        (!result.best || *slot.best > *result.best ||
         (*slot.best == *result.best && slot.best_trial < best_trial))) {
      result.best = slot.best;
      best_trial = slot.best_trial;
      result.witness_indices = std::move(slot.witness_indices);
      result.witness = std::move(slot.witness);
    }
  }
  return result;
}

}  // namespace alglen
