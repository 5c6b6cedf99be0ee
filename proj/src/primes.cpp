#include "toricgraph/primes.hpp"

#include "toricgraph/normality.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricgraph {

std::string PrimeKind::name() const {
  switch (tag) {
    case Tag::Cover: return "cover";
    case Tag::Zero: return "zero";
    case Tag::Exceptional: return "exceptional";
    case Tag::Variable: return "variable";
  }
  return "?";
}

std::string PrimeKind::str() const {
  switch (tag) {
    case Tag::Cover: {
      std::string s = "P_{";
      for (std::size_t i = 0; i < cover.size(); ++i) s += (i ? "," : "") + std::to_string(cover[i]);
      return s + "}";
    }
    case Tag::Zero: return "P_0";
    case Tag::Exceptional: return "exceptional";
    case Tag::Variable: return "Q_" + std::to_string(vertex);
  }
  return "?";
}

MonomialPrime prime_of_form(const SupportForm& f, const std::vector<Generator>& gens) {
  MonomialPrime p{f, {}, f.t_coeff() > 0};
  for (const auto& g : gens) {
    Integer v = f(g.point);
    if (v < 0) throw ConeError("form " + to_string(f.coeffs()) + " is negative on " + g.face.str());
    if (v > 0) p.generator_faces.push_back(g.face);
  }
  return p;
}

PrimeKind classify_prime(const MonomialPrime& p, const Graph& g) {
  const auto gens = semigroup_generators(g);
  auto faces_where = [&](auto pred) {
    std::vector<FaceLabel> out;
    for (const auto& gen : gens)
      if (pred(gen.face)) out.push_back(gen.face);
    return out;
  };
  const auto& faces = p.generator_faces;

  if (faces == faces_where([](const FaceLabel& f) { return f.kind != FaceLabel::Kind::Edge; }))
    return PrimeKind::zero_prime();

  for (Vertex i = 1; i <= g.num_vertices(); ++i)
    if (faces == faces_where([i](const FaceLabel& f) { return f.contains(i); }))
      return PrimeKind::variable_prime(i);

  VertexCover c;
  for (const auto& f : faces)
    if (f.kind == FaceLabel::Kind::Vertex) c.push_back(f.u);
  std::vector<char> in(g.num_vertices() + 1, 0);
  for (Vertex v : c) in[v] = 1;
  auto inside_c = [&](const FaceLabel& f) {
    return f.kind == FaceLabel::Kind::Empty || (in[f.u] && (f.kind == FaceLabel::Kind::Vertex || in[f.v]));
  };
  if (is_minimal_vertex_cover(g, c) && faces == faces_where(inside_c))
    return PrimeKind::cover_prime(std::move(c));

  return PrimeKind::exceptional();
}

std::vector<ClassifiedPrime> height_one_primes(const ToricCone& cone) {
  require_normal(cone.graph, "height_one_primes");
  std::vector<ClassifiedPrime> out;
  out.reserve(cone.facets.size());
  for (const auto& f : cone.facets) {
    auto p = prime_of_form(f, cone.generators);
    auto kind = classify_prime(p, cone.graph);
    out.push_back({std::move(p), std::move(kind)});
  }
  std::sort(out.begin(), out.end(), [](const ClassifiedPrime& a, const ClassifiedPrime& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.prime.form < b.prime.form;
  });
  return out;
}

std::vector<ClassifiedPrime> height_one_primes(const Graph& g) {
  require_normal(g, "height_one_primes");
  return height_one_primes(ToricCone::build(g));
}

SupportForm cover_form(int n, const VertexCover& c) {
  IntVector coeffs(n + 1, -1);
  coeffs[n] = 1;
  for (Vertex v : c) coeffs.at(v - 1) = 0;
  return SupportForm(std::move(coeffs));
}

CoverPrime cover_prime(const Graph& g, const VertexCover& c) {
  if (!is_vertex_cover(g, c)) throw std::invalid_argument("cover_prime: not a vertex cover");
  VertexCover sorted(c);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return {prime_of_form(cover_form(g.num_vertices(), sorted), semigroup_generators(g)),
          is_minimal_vertex_cover(g, sorted)};
}

PrimePrediction predicted_prime_set(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("predicted_prime_set: graph is not connected");
  require_normal(g, "predicted_prime_set");
  PrimePrediction pred;
  for (auto& c : minimal_vertex_covers(g)) pred.kinds.push_back(PrimeKind::cover_prime(std::move(c)));
  for (Vertex i = 1; i <= g.num_vertices(); ++i) pred.kinds.push_back(PrimeKind::variable_prime(i));
  if (bipartition(g).bipartite) {
    pred.theorem_tag = "Gconnected";
    pred.exact = true;
  } else {
    pred.kinds.push_back(PrimeKind::zero_prime());
    auto shape = recognize_whiskered_cycle(g);
    pred.exact = shape && shape->k % 2 == 1;
    pred.theorem_tag = pred.exact ? "unicyclic" : "inclusion-only";
  }
  std::sort(pred.kinds.begin(), pred.kinds.end());
  return pred;
}

std::vector<PrimeKind> kinds_of(const std::vector<ClassifiedPrime>& primes) {
  std::vector<PrimeKind> k;
  k.reserve(primes.size());
  for (const auto& p : primes) k.push_back(p.kind);
  std::sort(k.begin(), k.end());
  return k;
}

bool prime_set_equals_prediction(const std::vector<ClassifiedPrime>& primes,
                                 const PrimePrediction& prediction) {
  return kinds_of(primes) == prediction.kinds;
}

bool prime_set_includes_prediction(const std::vector<ClassifiedPrime>& primes,
                                   const PrimePrediction& prediction) {
  const auto observed = kinds_of(primes);
  return std::includes(observed.begin(), observed.end(), prediction.kinds.begin(),
                       prediction.kinds.end());
}

SupportForm exceptional_witness_form(const Graph& g, const std::vector<Vertex>& cycle, Vertex v) {
  const int n = g.num_vertices();
  std::vector<Vertex> cyc(cycle);
  if (cyc.size() > 1 && cyc.front() == cyc.back()) cyc.pop_back();
  const std::size_t k = cyc.size();
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("exceptional_witness_form: cycle must be odd");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (cyc[i] == cyc[j] || g.adjacent(cyc[i], cyc[j]) != consecutive)
        throw std::invalid_argument("exceptional_witness_form: not an induced cycle");
    }
  if (v < 1 || v > n) throw std::invalid_argument("exceptional_witness_form: vertex out of range");
  for (Vertex c : cyc)
    if (c == v || g.adjacent(c, v))
      throw std::invalid_argument("exceptional_witness_form: vertex " + std::to_string(v) +
                                  " lies on or next to the cycle");

  IntVector coeffs(n + 1, -1);
  for (Vertex w : g.neighbors(v)) coeffs[w - 1] = 0;
  coeffs[v - 1] = -2;
  coeffs[n] = 2;
  SupportForm f(std::move(coeffs));
  if (!is_supporting(f, semigroup_generators(g)))
    throw std::logic_error("exceptional_witness_form: form is negative on a generator");
  return f;
}

}  // namespace toricgraph
