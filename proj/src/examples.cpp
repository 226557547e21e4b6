#include "gogkit/examples.hpp"

#include "gogkit/errors.hpp"

namespace gogkit {

namespace {

Example lm_example() {
  Example ex;
  ex.presentation = parse_presentation(
      "< a, b, t | [a,b], t a^2 b^-1 t^-1 (a^2 b)^-1, t a b^2 t^-1 (a^-1 b^2)^-1 >");
  ex.metadata.valence = 10;
  ex.metadata.generator_count = 3;
  ex.metadata.relator_count = 3;
  return ex;
}

Example gamma_n_example(long long n) {
  if (n < 2) throw input_error("gamma_n requires n >= 2");
  Presentation p;
  const int a = p.add_generator(GeneratorSymbol::parse("a"));
  const int f = p.add_generator(GeneratorSymbol::parse("f"));
  const int t = p.add_generator(GeneratorSymbol::parse("t"));
  const Word wa{{Letter{a, +1}}}, wf{{Letter{f, +1}}}, wt{{Letter{t, +1}}};
  auto conj = [&](const Word& w, long long i) {  // w^{f^i} = f^i w f^-i
    return concat(concat(power(wf, i), w), power(wf, -i));
  };
  p.add_relator(power(wf, n));
  // t a^2 (a^f)^-1 t^-1 = a^2 a^f
  const Word af = conj(wa, 1);
  p.add_relator(concat(concat(wt, concat(power(wa, 2), inverse(af))),
                       concat(inverse(wt), inverse(concat(power(wa, 2), af)))));
  // t a (a^2)^f t^-1 = a^-1 (a^2)^f
  const Word a2f = conj(power(wa, 2), 1);
  p.add_relator(concat(concat(wt, concat(wa, a2f)),
                       concat(inverse(wt), inverse(concat(inverse(wa), a2f)))));
  for (long long i = 0; i < n; ++i)
    for (long long j = i + 1; j < n; ++j)
      p.add_relator(commutator(conj(wa, i), conj(wa, j)));

  Example ex;
  ex.presentation = std::move(p);
  ex.metadata.valence = 10 * n;
  ex.metadata.generator_count = 3;
  ex.metadata.relator_count = n * (n - 1) / 2 + 3;
  return ex;
}

Example bk_gamma_example(long long r) {
  if (r < 1) throw input_error("bk_gamma requires r >= 1");
  Presentation p;
  std::vector<int> v;
  for (long long i = 0; i < r; ++i)
    v.push_back(p.add_generator(GeneratorSymbol::parse("v" + std::to_string(i))));
  const int t = p.add_generator(GeneratorSymbol::parse("t"));
  for (long long i = 0; i < r; ++i)
    p.add_relator(power(Word{{Letter{v[static_cast<size_t>(i)], +1}}}, 2));
  for (long long i = 0; i < r; ++i)
    for (long long j = i + 1; j < r; ++j)
      p.add_relator(commutator(Word{{Letter{v[static_cast<size_t>(i)], +1}}},
                               Word{{Letter{v[static_cast<size_t>(j)], +1}}}));
  const Word wt{{Letter{t, +1}}};
  for (long long i = 1; i < r; ++i)
    p.add_relator(concat(concat(wt, Word{{Letter{v[static_cast<size_t>(i)], +1}}}),
                         concat(inverse(wt), Word{{Letter{v[static_cast<size_t>(i - 1)], -1}}})));
  Example ex;
  ex.presentation = std::move(p);
  ex.metadata.valence = 4;
  ex.metadata.covolume = Rational(Int(1), int_pow(Int(2), Int(r)));
  ex.metadata.generator_count = r + 1;
  ex.metadata.relator_count = r + r * (r - 1) / 2 + (r - 1);
  return ex;
}

Example bk_lambda_example(long long r) {
  if (r < 1) throw input_error("bk_lambda requires r >= 1");
  Example ex;
  ex.presentation = fundamental_group(bk_lambda_gog(r));
  ex.metadata.valence = 4;
  ex.metadata.covolume = Rational(Int(2), int_pow(Int(2), Int(r)));
  ex.metadata.generator_count = static_cast<long long>(ex.presentation.generator_count());
  ex.metadata.relator_count = static_cast<long long>(ex.presentation.relator_count());
  return ex;
}

Example lambda_kl_example(long long k, long long l) {
  if (k < 2 || l < 2) throw input_error("lambda_kl requires k, l >= 2");
  Presentation p = parse_presentation(
      "< a, b, x3, x4, x5, t | x3^" + std::to_string(k) + ", x4^" + std::to_string(k) +
      ", x5^" + std::to_string(l) +
      ", [a,b], [a,x3], [a,x4], [a,x5], [b,x3], [b,x4], [b,x5], [x3,x4],"
      " t a^2 b^-1 t^-1 = a^2 b, t a b^2 t^-1 = a^-1 b^2, t x3 t^-1 = x4, [t,x5] >");
  Example ex;
  ex.metadata.generator_count = static_cast<long long>(p.generator_count());
  ex.metadata.relator_count = static_cast<long long>(p.relator_count());
  ex.metadata.valence = 10;
  ex.presentation = std::move(p);
  return ex;
}

}  // namespace

Example example_registry(const std::string& name, const ExampleParams& params) {
  if (name == "lm") return lm_example();
  if (name == "gamma_n") {
    if (!params.n) throw input_error("gamma_n requires --n");
    return gamma_n_example(*params.n);
  }
  if (name == "bk_gamma") {
    if (!params.r) throw input_error("bk_gamma requires --r");
    return bk_gamma_example(*params.r);
  }
  if (name == "bk_lambda") {
    if (!params.r) throw input_error("bk_lambda requires --r");
    return bk_lambda_example(*params.r);
  }
  if (name == "lambda_kl") {
    if (!params.k || !params.l) throw input_error("lambda_kl requires --k and --l");
    return lambda_kl_example(*params.k, *params.l);
  }
  throw input_error("unknown example '" + name +
                    "' (known: lm, gamma_n, bk_gamma, bk_lambda, lambda_kl)");
}

GraphOfGroups lm_gog() {
  GraphOfGroups g;
  const int v = g.graph.add_vertex("v");
  g.graph.add_edge_pair(v, v, "e");
  g.vertex_groups.push_back(LocalGroup::free_abelian({"a", "b"}));
  g.edge_groups.push_back(LocalGroup::free_abelian({"e1", "e2"}));
  const Presentation& vp = g.vertex_groups[0].symbolic().pres;
  GraphOfGroups::EdgeMap fwd, bwd;
  // t (a^2 b^-1) t^-1 = a^2 b and t (a b^2) t^-1 = a^-1 b^2: the chosen
  // orientation carries the right-hand sides.
  fwd.images = {parse_word("a^2 b", vp), parse_word("a^-1 b^2", vp)};
  fwd.declared_index = 5;
  bwd.images = {parse_word("a^2 b^-1", vp), parse_word("a b^2", vp)};
  bwd.declared_index = 5;
  g.edge_maps = {fwd, bwd};
  return g;
}

GraphOfGroups gamma_n_gog(long long n) {
  if (n < 2) throw input_error("gamma_n requires n >= 2");
  GraphOfGroups g;
  const int v = g.graph.add_vertex("v");
  g.graph.add_edge_pair(v, v, "e");

  // Vertex group Z^n x| Z_n: a0..a{n-1}, f.
  SymbolicGroup vg;
  std::vector<int> a;
  for (long long i = 0; i < n; ++i)
    a.push_back(vg.pres.add_generator(GeneratorSymbol::parse("a" + std::to_string(i))));
  const int f = vg.pres.add_generator(GeneratorSymbol::parse("f"));
  const Word wf{{Letter{f, +1}}};
  vg.pres.add_relator(power(wf, n));
  for (long long i = 0; i < n; ++i)
    for (long long j = i + 1; j < n; ++j)
      vg.pres.add_relator(commutator(Word{{Letter{a[static_cast<size_t>(i)], +1}}},
                                     Word{{Letter{a[static_cast<size_t>(j)], +1}}}));
  for (long long i = 0; i < n; ++i)
    vg.pres.add_relator(concat(
        concat(wf, Word{{Letter{a[static_cast<size_t>(i)], +1}}}),
        concat(inverse(wf), Word{{Letter{a[static_cast<size_t>((i + 1) % n)], -1}}})));
  g.vertex_groups.push_back(LocalGroup::of(std::move(vg)));

  std::vector<std::string> egens;
  for (long long i = 0; i < n; ++i) egens.push_back("e" + std::to_string(i));
  g.edge_groups.push_back(LocalGroup::free_abelian(egens));

  const Presentation& vp = g.vertex_groups[0].symbolic().pres;
  GraphOfGroups::EdgeMap fwd, bwd;
  fwd.images = {parse_word("a0^2 a1", vp), parse_word("a0^-1 a1^2", vp)};
  bwd.images = {parse_word("a0^2 a1^-1", vp), parse_word("a0 a1^2", vp)};
  for (long long i = 2; i < n; ++i) {
    fwd.images.push_back(parse_word("a" + std::to_string(i), vp));
    bwd.images.push_back(parse_word("a" + std::to_string(i), vp));
  }
  fwd.declared_index = 5 * n;
  bwd.declared_index = 5 * n;
  g.edge_maps = {fwd, bwd};
  return g;
}

GraphOfGroups bk_gamma_gog(long long r) {
  if (r < 1) throw input_error("bk_gamma requires r >= 1");
  GraphOfGroups g;
  const int v = g.graph.add_vertex("v");
  g.graph.add_edge_pair(v, v, "e");
  FiniteGroup vr = FiniteGroup::elementary_abelian_2(static_cast<int>(r), "v");
  FiniteGroup wr = FiniteGroup::elementary_abelian_2(static_cast<int>(r - 1), "w");
  const Presentation vp = vr.presentation();
  GraphOfGroups::EdgeMap fwd, bwd;
  for (long long j = 0; j + 1 < r; ++j) {
    fwd.images.push_back(parse_word("v" + std::to_string(j), vp));
    bwd.images.push_back(parse_word("v" + std::to_string(j + 1), vp));
  }
  g.vertex_groups.push_back(LocalGroup::of(std::move(vr)));
  g.edge_groups.push_back(LocalGroup::of(std::move(wr)));
  g.edge_maps = {fwd, bwd};
  return g;
}

GraphOfGroups bk_lambda_gog(long long r) {
  if (r < 1) throw input_error("bk_lambda requires r >= 1");
  GraphOfGroups g;
  const int u = g.graph.add_vertex("u");
  const int w = g.graph.add_vertex("w");
  g.graph.add_edge_pair(u, w, "e1");
  g.graph.add_edge_pair(u, w, "e2");
  FiniteGroup ug = FiniteGroup::elementary_abelian_2(static_cast<int>(r), "u");
  FiniteGroup wg = FiniteGroup::elementary_abelian_2(static_cast<int>(r), "w");
  const Presentation up = ug.presentation();
  const Presentation wp = wg.presentation();
  g.vertex_groups.push_back(LocalGroup::of(std::move(ug)));
  g.vertex_groups.push_back(LocalGroup::of(std::move(wg)));
  g.edge_groups.push_back(LocalGroup::of(FiniteGroup::elementary_abelian_2(static_cast<int>(r - 1), "x")));
  g.edge_groups.push_back(LocalGroup::of(FiniteGroup::elementary_abelian_2(static_cast<int>(r - 1), "y")));
  GraphOfGroups::EdgeMap e1f, e1b, e2f, e2b;
  for (long long j = 0; j + 1 < r; ++j) {
    e1f.images.push_back(parse_word("u" + std::to_string(j), up));
    e1b.images.push_back(parse_word("w" + std::to_string(j + 1), wp));
    e2f.images.push_back(parse_word("u" + std::to_string(j + 1), up));
    e2b.images.push_back(parse_word("w" + std::to_string(j), wp));
  }
  g.edge_maps = {e1f, e1b, e2f, e2b};
  return g;
}

Rational tower_covolume(long long r, long long s) {
  if (r < 2 || s < 1) throw input_error("tower_covolume requires r >= 2, s >= 1");
  const Int exponent = int_pow(Int(r), Int(s));
  if (exponent > 1'000'000)
    throw budget_error("tower exponent r^s = " + exponent.str() + " too large to expand");
  return Rational(Int(2), int_pow(Int(2), exponent));
}

}  // namespace gogkit
