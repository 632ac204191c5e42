#pragma once

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "hole.hpp"
#include "octet_search.hpp"
#include "oracle.hpp"
#include "quad_search.hpp"

namespace evenhole {

/// Strategy yielding vertex subsets whose induced subgraphs the driver
/// searches. Stands in for the cleaning stage, which promises that some
/// yielded subgraph is shallow and contains a shortest even hole.
class CleaningProvider {
 public:
  virtual ~CleaningProvider() = default;
  virtual std::string name() const = 0;
  virtual std::vector<std::vector<int>> subsets(const Graph& g) const = 0;
};

class TrivialProvider final : public CleaningProvider {
 public:
  std::string name() const override { return "trivial"; }
  std::vector<std::vector<int>> subsets(const Graph& g) const override {
    std::vector<int> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    return {all};
  }
};

/// Every vertex subset of size >= 4, in increasing bitmask order.
class SubsetsProvider final : public CleaningProvider {
 public:
  explicit SubsetsProvider(int max_vertices) : max_vertices_(max_vertices) {
    if (max_vertices < 4 || max_vertices > 18)
      throw std::invalid_argument("subsets provider guard must be in [4, 18]");
  }
  std::string name() const override { return "subsets:" + std::to_string(max_vertices_); }
  std::vector<std::vector<int>> subsets(const Graph& g) const override {
    int n = g.vertex_count();
    if (n > max_vertices_)
      throw std::invalid_argument("subsets provider guarded to n <= " +
                                  std::to_string(max_vertices_));
    std::vector<std::vector<int>> out;
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
      if (std::popcount(mask) < 4) continue;
      std::vector<int> subset;
      for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1) subset.push_back(i);
      }
      out.push_back(std::move(subset));
    }
    return out;
  }

 private:
  int max_vertices_;
};

/// Subsets read from a file: one subset per line of whitespace-separated
/// 1-indexed vertex ids; blank lines and "c" comment lines are ignored.
class FileProvider final : public CleaningProvider {
 public:
  explicit FileProvider(const std::string& path) : path_(path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open provider file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ls(line);
      std::string first;
      if (!(ls >> first) || first == "c") continue;
      std::vector<long> ids;
      ls.clear();
      ls.str(line);
      long id;
      while (ls >> id) ids.push_back(id);
      if (!ls.eof()) throw ParseError(lineno, "malformed subset line");
      raw_subsets_.push_back(std::move(ids));
    }
  }
  std::string name() const override { return "file:" + path_; }
  std::vector<std::vector<int>> subsets(const Graph& g) const override {
    std::vector<std::vector<int>> out;
    for (const auto& ids : raw_subsets_) {
      std::vector<int> subset;
      for (long id : ids) {
        if (id < 1 || id > g.vertex_count())
          throw std::invalid_argument("provider subset id out of range: " + std::to_string(id));
        subset.push_back(static_cast<int>(id - 1));
      }
      out.push_back(std::move(subset));
    }
    return out;
  }

 private:
  std::string path_;
  std::vector<std::vector<long>> raw_subsets_;
};

/// Descriptor forms: "trivial", "subsets:<max_n>", "file:<path>".
inline std::unique_ptr<CleaningProvider> make_provider(const std::string& descriptor) {
  if (descriptor == "trivial") return std::make_unique<TrivialProvider>();
  if (descriptor.rfind("subsets:", 0) == 0)
    return std::make_unique<SubsetsProvider>(std::stoi(descriptor.substr(8)));
  if (descriptor.rfind("file:", 0) == 0)
    return std::make_unique<FileProvider>(descriptor.substr(5));
  throw std::invalid_argument("unknown provider descriptor: " + descriptor);
}

enum class VerdictStatus { Found, NoEvenHole, Unresolved };

inline const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Found:
      return "found";
    case VerdictStatus::NoEvenHole:
      return "no_even_hole";
    case VerdictStatus::Unresolved:
      return "unresolved";
  }
  return "unknown";
}

struct SubgraphOutcome {
  std::vector<int> subset;    // parent ids, ascending
  std::optional<Hole> quad;   // in parent ids
  std::optional<Hole> octet;  // in parent ids
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Unresolved;
  std::optional<Hole> hole;
  std::string stage;  // "existence" | "bounded" | "long"
  bool long_certified = false;
  std::vector<SubgraphOutcome> subgraphs;
};

/// The driver: existence check, bounded search up to `bound`, then per
/// provider subset both searches on the induced subgraph with a deterministic
/// minimum reduction. A Found hole is always a verified even hole of g; it is
/// shortest whenever the bounded search resolves, or some examined subgraph
/// is shallow and contains a shortest even hole of g. Unresolved is the
/// honest outcome when neither search certifies anything.
inline Verdict shortest_even_hole(const Graph& g, const CleaningProvider& provider,
                                  int bound = kLongThreshold, int threads = 1) {
  Verdict verdict;
  if (!has_even_hole(g)) {
    verdict.status = VerdictStatus::NoEvenHole;
    verdict.stage = "existence";
    return verdict;
  }
  if (std::optional<Hole> h = bounded_shortest_even_hole(g, bound)) {
    verdict.status = VerdictStatus::Found;
    verdict.hole = h;
    verdict.stage = "bounded";
    return verdict;
  }
  if (bound < kLongThreshold) {
    // the configured bound is below the long threshold, so being absent up
    // to `bound` does not certify a long graph; re-check at the threshold
    if (std::optional<Hole> h = bounded_shortest_even_hole(g, kLongThreshold)) {
      verdict.status = VerdictStatus::Found;
      verdict.hole = h;
      verdict.stage = "bounded";
      return verdict;
    }
  }
  verdict.stage = "long";
  verdict.long_certified = true;

  std::optional<Hole> best;
  for (const std::vector<int>& subset : provider.subsets(g)) {
    InducedSubgraph sub = induced_subgraph(g, subset);
    SubgraphOutcome outcome;
    outcome.subset = sub.to_parent;
    auto remap = [&](const Hole& h) {
      std::vector<int> cycle;
      cycle.reserve(h.cycle.size());
      for (int z : h.cycle) cycle.push_back(sub.to_parent[z]);
      return Hole{canonical_cycle(cycle)};
    };
    if (std::optional<Hole> h = quad_search(sub.graph, threads)) outcome.quad = remap(*h);
    if (std::optional<Hole> h = octet_search(sub.graph, /*long_certified=*/true, threads))
      outcome.octet = remap(*h);
    for (const std::optional<Hole>* h : {&outcome.quad, &outcome.octet}) {
      if (!h->has_value()) continue;
      std::optional<Hole> checked = validate_hole(g, (*h)->cycle);
      if (!checked || !checked->even())
        throw std::logic_error("subgraph candidate is not an even hole of the parent graph");
      if (!best || **h < *best) best = **h;
    }
    verdict.subgraphs.push_back(std::move(outcome));
  }
  if (best) {
    verdict.status = VerdictStatus::Found;
    verdict.hole = best;
  } else {
    verdict.status = VerdictStatus::Unresolved;
  }
  return verdict;
}

}  // namespace evenhole
