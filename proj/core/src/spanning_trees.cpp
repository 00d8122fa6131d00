#include "critgroup/spanning_trees.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <thread>

#include "critgroup/errors.hpp"

namespace critgroup {

namespace {

struct ScalarOverflow {};

// Scalar policies for the incremental echelon basis. The int64 policy throws
// ScalarOverflow, which sends the whole enumeration to the mpz policy.
struct Int64Ops {
  using Scalar = std::int64_t;
  static Scalar from(const Integer& x) {
    if (!x.fits_slong_p()) throw ScalarOverflow{};
    return x.get_si();
  }
  static bool is_zero(Scalar x) { return x == 0; }
  // a*b - c*d
  static Scalar cross(Scalar a, Scalar b, Scalar c, Scalar d) {
    Scalar ab, cd, r;
    if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) ||
        __builtin_sub_overflow(ab, cd, &r))
      throw ScalarOverflow{};
    return r;
  }
  static Scalar gcd(Scalar a, Scalar b) { return std::gcd(a, b); }
  static Scalar div(Scalar a, Scalar g) { return a / g; }
};

struct MpzOps {
  using Scalar = Integer;
  static Scalar from(const Integer& x) { return x; }
  static bool is_zero(const Scalar& x) { return sgn(x) == 0; }
  static Scalar cross(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    return a * b - c * d;
  }
  static Scalar gcd(const Scalar& a, const Scalar& b) {
    Scalar g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static Scalar div(const Scalar& a, const Scalar& g) {
    Scalar q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    return q;
  }
};

// Row-echelon basis over Q that supports push/pop, kept fraction-free with
// content removal so entries stay small.
template <class Ops>
class EchelonStack {
 public:
  using Scalar = typename Ops::Scalar;
  using Vec = std::vector<Scalar>;

  bool push(const Vec& column) {
    Vec v = column;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (Ops::is_zero(v[p])) continue;
      const Vec& b = basis_[k];
      const Scalar bp = b[p];
      const Scalar vp = v[p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = Ops::cross(bp, v[j], vp, b[j]);
      normalize(v);
    }
    std::size_t p = 0;
    while (p < v.size() && Ops::is_zero(v[p])) ++p;
    if (p == v.size()) return false;
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  void pop() {
    basis_.pop_back();
    pivots_.pop_back();
  }

  std::size_t size() const { return basis_.size(); }

 private:
  static void normalize(Vec& v) {
    Scalar g = 0;
    for (const auto& x : v)
      if (!Ops::is_zero(x)) g = Ops::gcd(g, x);
    if (Ops::is_zero(g) || g == 1) return;
    for (auto& x : v)
      if (!Ops::is_zero(x)) x = Ops::div(x, g);
  }

  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

template <class Ops>
std::vector<typename Ops::Scalar> to_scalars(const IntegerVector& col) {
  std::vector<typename Ops::Scalar> out;
  out.reserve(col.size());
  for (const auto& x : col) out.push_back(Ops::from(x));
  return out;
}

struct SearchShared {
  int dim;
  IntegerMatrix boundary;
  std::size_t target;
  const EnumerationOptions* options;
  std::atomic<std::uint64_t> extensions{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};
  std::mutex callback_mutex;
};

template <class Ops>
class TreeSearch {
 public:
  TreeSearch(SearchShared& shared, unsigned worker, unsigned workers)
      : shared_(shared), worker_(worker), workers_(workers) {
    const std::size_t n = shared_.boundary.cols();
    columns_.reserve(n);
    for (std::size_t c = 0; c < n; ++c) columns_.push_back(to_scalars<Ops>(shared_.boundary.col(c)));
    census_.dimension = shared_.dim;
  }

  TreeCensus run() {
    const std::size_t n = columns_.size();
    const std::size_t k = shared_.target;
    if (k == 0) {
      record();
      return census_;
    }
    for (std::size_t first = 0; first + k <= n; ++first) {
      if (first % workers_ != worker_) continue;
      if (!extend(first)) break;
    }
    return census_;
  }

 private:
  // Tries to add face `idx`; on success recurses. Returns false to abort.
  bool extend(std::size_t idx) {
    if (shared_.stop.load(std::memory_order_relaxed)) return false;
    const std::uint64_t used = shared_.extensions.fetch_add(1, std::memory_order_relaxed) + 1;
    ++census_.extensions;
    if (used > shared_.options->budget) {
      shared_.exhausted = true;
      shared_.stop = true;
      return false;
    }
    if (!echelon_.push(columns_[idx])) return true;
    chosen_.push_back(idx);
    bool ok = true;
    if (chosen_.size() == shared_.target) {
      ok = record();
    } else {
      const std::size_t n = columns_.size();
      const std::size_t need = shared_.target - chosen_.size();
      for (std::size_t next = idx + 1; next + need <= n; ++next)
        if (!extend(next)) {
          ok = false;
          break;
        }
    }
    chosen_.pop_back();
    echelon_.pop();
    return ok;
  }

  bool record() {
    SpanningTree tree;
    tree.dimension = shared_.dim;
    tree.faces = chosen_;
    tree.torsion_order = 1;
    for (const auto& f : invariant_factors(shared_.boundary.select_columns(chosen_)))
      tree.torsion_order *= f;
    ++census_.count;
    census_.tau += tree.torsion_order * tree.torsion_order;
    ++census_.torsion_histogram[tree.torsion_order];
    const auto& opts = *shared_.options;
    if (opts.on_tree || opts.keep_going) {
      std::lock_guard lock(shared_.callback_mutex);
      if (opts.on_tree) opts.on_tree(tree);
      if (opts.keep_going && !opts.keep_going(tree)) {
        shared_.stop = true;
        return false;
      }
    }
    return true;
  }

  SearchShared& shared_;
  unsigned worker_;
  unsigned workers_;
  std::vector<std::vector<typename Ops::Scalar>> columns_;
  EchelonStack<Ops> echelon_;
  std::vector<std::size_t> chosen_;
  TreeCensus census_;
};

template <class Ops>
TreeCensus run_search(SearchShared& shared) {
  const unsigned workers = std::max(1u, shared.options->workers);
  if (workers == 1) return TreeSearch<Ops>(shared, 0, 1).run();
  std::vector<TreeCensus> parts(workers);
  std::vector<std::thread> threads;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      try {
        parts[w] = TreeSearch<Ops>(shared, w, workers).run();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        shared.stop = true;
      }
    });
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  TreeCensus total;
  total.dimension = shared.dim;
  for (const auto& p : parts) total.merge(p);
  return total;
}

void check_tree_dimension(const SimplicialComplex& complex, int i) {
  if (i < 0 || i > complex.dimension())
    throw DimensionError("spanning tree dimension " + std::to_string(i) + " outside [0, " +
                         std::to_string(complex.dimension()) + "]");
}

bool skeleton_is_apc(const SimplicialComplex& complex, int i) {
  for (int j = -1; j < i; ++j)
    if (complex.betti(j) != 0) return false;
  return true;
}

}  // namespace

std::vector<Simplex> SpanningTree::face_list(const SimplicialComplex& complex) const {
  std::vector<Simplex> out;
  const auto& all = complex.faces(dimension);
  for (auto idx : faces) out.push_back(all[idx]);
  return out;
}

std::vector<std::size_t> SpanningTree::complement(const SimplicialComplex& complex) const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t idx = 0; idx < complex.face_count(dimension); ++idx) {
    if (next < faces.size() && faces[next] == idx) {
      ++next;
      continue;
    }
    out.push_back(idx);
  }
  return out;
}

std::size_t tree_size(const SimplicialComplex& complex, int i) {
  check_tree_dimension(complex, i);
  return rank(complex.boundary_matrix(i)) + complex.betti(i - 1);
}

Integer tree_torsion(const SimplicialComplex& complex, int i, std::span<const std::size_t> faces) {
  Integer order = 1;
  for (const auto& f : invariant_factors(complex.boundary_matrix(i).select_columns(faces))) order *= f;
  return order;
}

std::optional<SpanningTree> is_spanning_tree(const SimplicialComplex& complex, int i,
                                             std::span<const std::size_t> faces) {
  check_tree_dimension(complex, i);
  std::vector<std::size_t> sorted(faces.begin(), faces.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  if (!sorted.empty() && sorted.back() >= complex.face_count(i)) return std::nullopt;
  if (sorted.size() != tree_size(complex, i)) return std::nullopt;
  const IntegerMatrix columns = complex.boundary_matrix(i).select_columns(sorted);
  const std::vector<Integer> factors = invariant_factors(columns);
  if (factors.size() != sorted.size()) return std::nullopt;
  SpanningTree tree;
  tree.dimension = i;
  tree.faces = std::move(sorted);
  for (const auto& f : factors) tree.torsion_order *= f;
  return tree;
}

std::optional<SpanningTree> is_spanning_tree(const SimplicialComplex& complex, int i,
                                             const std::vector<Simplex>& faces) {
  check_tree_dimension(complex, i);
  std::vector<std::size_t> idx;
  for (const auto& f : faces) {
    if (f.dimension() != i) return std::nullopt;
    const auto at = complex.index_of(f);
    if (!at) return std::nullopt;
    idx.push_back(*at);
  }
  return is_spanning_tree(complex, i, idx);
}

void TreeCensus::merge(const TreeCensus& other) {
  count += other.count;
  tau += other.tau;
  for (const auto& [t, n] : other.torsion_histogram) torsion_histogram[t] += n;
  partial = partial || other.partial;
  extensions += other.extensions;
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

TreeCensus enumerate_trees(const SimplicialComplex& complex, int i, const EnumerationOptions& options) {
  check_tree_dimension(complex, i);
  if (!skeleton_is_apc(complex, i)) {
    TreeCensus empty;
    empty.dimension = i;
    empty.warnings.push_back("the " + std::to_string(i) +
                             "-skeleton is not acyclic in positive codimension; it has no spanning trees");
    return empty;
  }
  SearchShared shared;
  shared.dim = i;
  shared.boundary = complex.boundary_matrix(i);
  shared.target = rank(shared.boundary);
  shared.options = &options;

  TreeCensus census;
  try {
    census = run_search<Int64Ops>(shared);
  } catch (const ScalarOverflow&) {
    if (options.on_tree)
      throw std::runtime_error("enumerate_trees: int64 overflow after streaming began");
    shared.extensions = 0;
    shared.stop = false;
    shared.exhausted = false;
    census = run_search<MpzOps>(shared);
  }
  if (shared.exhausted) {
    census.partial = true;
    census.warnings.push_back("enumeration budget of " + std::to_string(options.budget) +
                              " subset extensions exhausted; census is partial");
  }
  return census;
}

std::optional<SpanningTree> find_torsion_free_tree(const SimplicialComplex& complex, int i) {
  check_tree_dimension(complex, i);
  if (complex.betti(i - 1) != 0) return std::nullopt;
  const IntegerMatrix boundary = complex.boundary_matrix(i);
  const std::size_t target = rank(boundary);
  EchelonStack<MpzOps> echelon;
  std::vector<std::size_t> chosen;
  for (std::size_t c = 0; c < boundary.cols() && chosen.size() < target; ++c)
    if (echelon.push(boundary.col(c))) chosen.push_back(c);
  auto greedy = is_spanning_tree(complex, i, chosen);
  if (greedy && greedy->is_torsion_free()) return greedy;

  std::optional<SpanningTree> found;
  EnumerationOptions options;
  options.budget = std::numeric_limits<std::uint64_t>::max();
  options.keep_going = [&](const SpanningTree& t) {
    if (!t.is_torsion_free()) return true;
    found = t;
    return false;
  };
  enumerate_trees(complex, i, options);
  return found;
}

}  // namespace critgroup
