#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace evenhole {

/// xorshift64* generator (shifts 12/25/27, multiplier 0x2545F4914F6CDD1D).
/// A zero seed is replaced by 0x9E3779B97F4A7C15 so the register never
/// sticks at zero. Identical streams on every platform.
struct Xorshift64Star {
  uint64_t state;

  explicit Xorshift64Star(uint64_t seed)
      : state(seed ? seed : uint64_t{0x9E3779B97F4A7C15}) {}

  uint64_t next() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * uint64_t{0x2545F4914F6CDD1D};
  }
};

/// Description of one corpus graph.
struct GenSpec {
  enum class Model { Cycle, Er, Theta, ShortcutPlant, DecoratedLong };

  Model model = Model::Cycle;
  int n = 0;                  // cycle(n), er(n, ...)
  int a = 0, b = 0, c = 0;    // theta(a, b, c)
  int k = 0;                  // shortcut_plant(k, ...), decorated_long(k, ...)
  int d = 0;                  // shortcut_plant(k, d, seed)
  int extras = 0;             // decorated_long(k, extras, seed)
  long p_num = 0, p_den = 1;  // er edge probability as a fraction
  uint64_t seed = 0;
};

inline void validate_spec(const GenSpec& s) {
  switch (s.model) {
    case GenSpec::Model::Cycle:
      if (s.n < 3) throw std::invalid_argument("cycle requires n >= 3");
      break;
    case GenSpec::Model::Er:
      if (s.n < 0) throw std::invalid_argument("er requires n >= 0");
      if (s.p_den < 1 || s.p_num < 0 || s.p_num > s.p_den)
        throw std::invalid_argument("er probability must be a fraction in [0, 1]");
      break;
    case GenSpec::Model::Theta: {
      if (s.a < 1 || s.b < 1 || s.c < 1)
        throw std::invalid_argument("theta requires path lengths >= 1");
      int ones = (s.a == 1) + (s.b == 1) + (s.c == 1);
      if (ones > 1) throw std::invalid_argument("theta allows at most one path of length 1");
      break;
    }
    case GenSpec::Model::ShortcutPlant:
      if (s.k < 10 || s.k % 2 != 0)
        throw std::invalid_argument("shortcut_plant requires even k >= 10");
      if (s.d < 2 || s.d > s.k / 2)
        throw std::invalid_argument("shortcut_plant requires 2 <= d <= k/2");
      break;
    case GenSpec::Model::DecoratedLong:
      if (s.k < 24 || s.k % 2 != 0)
        throw std::invalid_argument("decorated_long requires even k >= 24");
      if (s.extras < 0) throw std::invalid_argument("decorated_long requires extras >= 0");
      break;
  }
}

/// Deterministic construction per (model, parameters, seed).
inline Graph generate(const GenSpec& s) {
  validate_spec(s);
  std::vector<std::pair<int, int>> edges;
  switch (s.model) {
    case GenSpec::Model::Cycle: {
      for (int i = 0; i < s.n; ++i) edges.emplace_back(i, (i + 1) % s.n);
      return Graph::from_edges(s.n, edges);
    }
    case GenSpec::Model::Er: {
      Xorshift64Star rng(s.seed);
      for (int u = 0; u < s.n; ++u) {
        for (int v = u + 1; v < s.n; ++v) {
          if (static_cast<long>(rng.next() % static_cast<uint64_t>(s.p_den)) < s.p_num)
            edges.emplace_back(u, v);
        }
      }
      return Graph::from_edges(s.n, edges);
    }
    case GenSpec::Model::Theta: {
      // terminals 0 and 1 joined by internally disjoint paths of lengths
      // a, b, c; internal vertices numbered from 2 path by path
      int next = 2;
      for (int len : {s.a, s.b, s.c}) {
        int prev = 0;
        for (int i = 1; i < len; ++i) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
        edges.emplace_back(prev, 1);
      }
      return Graph::from_edges(next, edges);
    }
    case GenSpec::Model::ShortcutPlant: {
      // C_k plus a fresh length-2 path between hole vertices 0 and d
      for (int i = 0; i < s.k; ++i) edges.emplace_back(i, (i + 1) % s.k);
      edges.emplace_back(0, s.k);
      edges.emplace_back(s.d, s.k);
      return Graph::from_edges(s.k + 1, edges);
    }
    case GenSpec::Model::DecoratedLong: {
      // C_k plus pendant trees: each extra vertex hangs off a seeded choice
      // of an existing vertex, so no new cycle appears
      for (int i = 0; i < s.k; ++i) edges.emplace_back(i, (i + 1) % s.k);
      Xorshift64Star rng(s.seed);
      for (int e = 0; e < s.extras; ++e) {
        int id = s.k + e;
        int parent = static_cast<int>(rng.next() % static_cast<uint64_t>(id));
        edges.emplace_back(parent, id);
      }
      return Graph::from_edges(s.k + s.extras, edges);
    }
  }
  throw std::logic_error("unreachable");
}

inline std::string spec_to_string(const GenSpec& s) {
  std::ostringstream out;
  switch (s.model) {
    case GenSpec::Model::Cycle:
      out << "cycle(" << s.n << ")";
      break;
    case GenSpec::Model::Er:
      out << "er(" << s.n << "," << s.p_num << "/" << s.p_den << "," << s.seed << ")";
      break;
    case GenSpec::Model::Theta:
      out << "theta(" << s.a << "," << s.b << "," << s.c << ")";
      break;
    case GenSpec::Model::ShortcutPlant:
      out << "shortcut_plant(" << s.k << "," << s.d << "," << s.seed << ")";
      break;
    case GenSpec::Model::DecoratedLong:
      out << "decorated_long(" << s.k << "," << s.extras << "," << s.seed << ")";
      break;
  }
  return out.str();
}

/// The comment line the writer embeds: "gen <model> <params> [<seed>]".
inline std::string gen_comment(const GenSpec& s) {
  std::ostringstream out;
  out << "gen ";
  switch (s.model) {
    case GenSpec::Model::Cycle:
      out << "cycle " << s.n;
      break;
    case GenSpec::Model::Er:
      out << "er " << s.n << " " << s.p_num << "/" << s.p_den << " " << s.seed;
      break;
    case GenSpec::Model::Theta:
      out << "theta " << s.a << " " << s.b << " " << s.c;
      break;
    case GenSpec::Model::ShortcutPlant:
      out << "shortcut_plant " << s.k << " " << s.d << " " << s.seed;
      break;
    case GenSpec::Model::DecoratedLong:
      out << "decorated_long " << s.k << " " << s.extras << " " << s.seed;
      break;
  }
  return out.str();
}

namespace detail {

inline std::vector<std::string> split_args(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

inline long parse_long(const std::string& s) {
  size_t pos = 0;
  long v = std::stol(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
  return v;
}

}  // namespace detail

/// Parses "model(arg,...)": cycle(n), er(n,num/den,seed), theta(a,b,c),
/// shortcut_plant(k,d,seed), decorated_long(k,extras,seed).
inline GenSpec parse_gen_spec(const std::string& text) {
  size_t open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw std::invalid_argument("expected model(args): " + text);
  std::string model = text.substr(0, open);
  std::vector<std::string> args = detail::split_args(text.substr(open + 1, text.size() - open - 2));

  GenSpec s;
  auto want = [&](size_t count) {
    if (args.size() != count)
      throw std::invalid_argument(model + " expects " + std::to_string(count) + " arguments");
  };
  if (model == "cycle") {
    want(1);
    s.model = GenSpec::Model::Cycle;
    s.n = static_cast<int>(detail::parse_long(args[0]));
  } else if (model == "er") {
    want(3);
    s.model = GenSpec::Model::Er;
    s.n = static_cast<int>(detail::parse_long(args[0]));
    size_t slash = args[1].find('/');
    if (slash == std::string::npos)
      throw std::invalid_argument("er probability must be num/den: " + args[1]);
    s.p_num = detail::parse_long(args[1].substr(0, slash));
    s.p_den = detail::parse_long(args[1].substr(slash + 1));
    s.seed = static_cast<uint64_t>(detail::parse_long(args[2]));
  } else if (model == "theta") {
    want(3);
    s.model = GenSpec::Model::Theta;
    s.a = static_cast<int>(detail::parse_long(args[0]));
    s.b = static_cast<int>(detail::parse_long(args[1]));
    s.c = static_cast<int>(detail::parse_long(args[2]));
  } else if (model == "shortcut_plant") {
    want(3);
    s.model = GenSpec::Model::ShortcutPlant;
    s.k = static_cast<int>(detail::parse_long(args[0]));
    s.d = static_cast<int>(detail::parse_long(args[1]));
    s.seed = static_cast<uint64_t>(detail::parse_long(args[2]));
  } else if (model == "decorated_long") {
    want(3);
    s.model = GenSpec::Model::DecoratedLong;
    s.k = static_cast<int>(detail::parse_long(args[0]));
    s.extras = static_cast<int>(detail::parse_long(args[1]));
    s.seed = static_cast<uint64_t>(detail::parse_long(args[2]));
  } else {
    throw std::invalid_argument("unknown model: " + model);
  }
  validate_spec(s);
  return s;
}

/// Renders the graph file for a spec, embedding the gen comment.
inline std::string render_generated(const GenSpec& s) {
  return render_graph(generate(s), {gen_comment(s)});
}

}  // namespace evenhole
