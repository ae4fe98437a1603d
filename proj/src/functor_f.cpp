#include "pkh/functor_f.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pkh {

SigmaMorphism normalized(std::vector<Summand> summands) {
  SigmaMorphism out;
  if (summands.empty()) return out;
  int rows = summands.front().phi.rows;
  int cols = summands.front().phi.cols;
  Lag src = gen_source(summands.front().g);
  Lag tgt = gen_target(summands.front().g);
  std::map<Gen, F2Matrix> acc;
  for (Summand& s : summands) {
    if (s.phi.rows != rows || s.phi.cols != cols)
      throw std::invalid_argument("summand matrices differ in shape");
    if (gen_source(s.g) != src || gen_target(s.g) != tgt)
      throw std::invalid_argument("summand generators differ in hom space");
    auto it = acc.find(s.g);
    if (it == acc.end())
      acc.emplace(s.g, std::move(s.phi));
    else
      it->second = add(it->second, s.phi);
  }
  for (auto& [g, phi] : acc)
    if (!phi.is_zero()) out.summands.push_back({std::move(phi), g});
  return out;
}

SigmaMorphism add(const SigmaMorphism& a, const SigmaMorphism& b) {
  std::vector<Summand> all(a.summands);
  all.insert(all.end(), b.summands.begin(), b.summands.end());
  return normalized(std::move(all));
}

SigmaMorphism mu2_sigma(const SigmaMorphism& later, const SigmaMorphism& earlier) {
  std::vector<Summand> out;
  for (const Summand& l : later.summands)
    for (const Summand& e : earlier.summands)
      if (auto g = mu2(l.g, e.g))
        out.push_back({mul(l.phi, e.phi), *g});
  return normalized(std::move(out));
}

SigmaMorphism mu3_sigma(const SigmaMorphism& z, const SigmaMorphism& y,
                        const SigmaMorphism& x) {
  std::vector<Summand> out;
  for (const Summand& sz : z.summands)
    for (const Summand& sy : y.summands)
      for (const Summand& sx : x.summands)
        if (auto g = mu3(sz.g, sy.g, sx.g))
          out.push_back({mul(sz.phi, mul(sy.phi, sx.phi)), *g});
  return normalized(std::move(out));
}

std::optional<int> summand_degree(const Summand& s, const SigmaObject& src,
                                  const SigmaObject& tgt) {
  auto d = map_degree(s.phi, tensor_power_A(src.m), tensor_power_A(tgt.m));
  if (!d) return std::nullopt;
  return *d + gen_degree(s.g) + src.sigma - tgt.sigma;
}

SigmaMorphism f1_elementary(SaddleKind kind, int m_src, int l_src) {
  if (l_src != 0 && l_src != 1)
    throw std::invalid_argument("arc-pairing type must be 0 or 1");
  const FrobeniusData& fr = frobenius_data();
  const Gen al = l_src == 0 ? Gen::a0 : Gen::a1;
  const Gen cl = l_src == 0 ? Gen::c0 : Gen::c1;
  auto idpow = [](int u) {
    if (u < 0) throw std::invalid_argument("saddle needs more circles");
    return F2Matrix::identity(1 << u);
  };
  std::vector<Summand> out;
  switch (kind) {
    case SaddleKind::EarringArcCircleSplit:
      out.push_back({kron(idpow(m_src), fr.eta_dot), al});
      break;
    case SaddleKind::EarringArcCircleMerge:
      out.push_back({kron(idpow(m_src - 1), fr.eps_dot), al});
      break;
    case SaddleKind::PlainArcCircleSplit:
      out.push_back({kron(idpow(m_src), fr.eta_dot), al});
      out.push_back({kron(idpow(m_src), fr.eta), cl});
      break;
    case SaddleKind::PlainArcCircleMerge:
      out.push_back({kron(idpow(m_src - 1), fr.eps_dot), al});
      out.push_back({kron(idpow(m_src - 1), fr.eps), cl});
      break;
    case SaddleKind::CircleCircleMerge:
      out.push_back({kron(idpow(m_src - 2), fr.mult), al});
      break;
    case SaddleKind::CircleSplit:
      out.push_back({kron(idpow(m_src - 1), fr.split), al});
      break;
    case SaddleKind::ArcArc:
      out.push_back({idpow(m_src), l_src == 0 ? Gen::q10 : Gen::p01});
      break;
  }
  return normalized(std::move(out));
}

TwistedComplex build_delta(const ResolutionCube& cube,
                           std::optional<std::pair<int, int>> counts) {
  const auto [n_plus, n_minus] = counts.value_or(std::pair<int, int>{0, 0});
  TwistedComplex tc;
  tc.absolute = counts.has_value();
  tc.objects.reserve(cube.vertices.size());
  for (uint32_t i = 0; i < cube.vertices.size(); ++i) {
    int h = -n_minus + std::popcount(i);
    tc.objects.push_back({cube.vertices[i].type == 0 ? Lag::L0 : Lag::L1,
                          cube.vertices[i].num_circles(),
                          n_minus - n_plus - 2 * h, h});
  }

  for (const CubeEdge& e : cube.edges) {
    const SigmaObject& src = tc.objects[e.from];
    const SigmaObject& tgt = tc.objects[e.to];
    SigmaMorphism tmpl = f1_elementary(e.kind, src.m, static_cast<int>(src.l));

    // Into template order: unaffected circles first, affected last.
    std::vector<int> perm_in;
    for (int s = 0; s < src.m; ++s)
      if (!std::count(e.src_affected.begin(), e.src_affected.end(), s))
        perm_in.push_back(s);
    perm_in.insert(perm_in.end(), e.src_affected.begin(), e.src_affected.end());

    // Out of template order, back to the target's canonical order.
    std::vector<int> arranged(e.unaffected_map);
    arranged.insert(arranged.end(), e.tgt_affected.begin(), e.tgt_affected.end());
    std::vector<int> perm_out(arranged.size());
    for (size_t t = 0; t < arranged.size(); ++t) perm_out[arranged[t]] = int(t);

    F2Matrix pin = tensor_permutation(src.m, perm_in);
    F2Matrix pout = tensor_permutation(tgt.m, perm_out);
    std::vector<Summand> conj;
    conj.reserve(tmpl.summands.size());
    for (const Summand& s : tmpl.summands)
      conj.push_back({mul(pout, mul(s.phi, pin)), s.g});
    SigmaMorphism entry = normalized(std::move(conj));

    for (const Summand& s : entry.summands) {
      if (gen_source(s.g) != src.l || gen_target(s.g) != tgt.l)
        throw std::logic_error("cube edge generator leaves the wrong arc type");
      auto d = summand_degree(s, src, tgt);
      if (!d || *d != 1 || tgt.h != src.h + 1)
        throw std::logic_error("cube edge map is not of bidegree (1,1)");
    }
    if (!entry.zero())
      tc.delta[{int(e.from), int(e.to)}] = std::move(entry);
  }
  return tc;
}

}  // namespace pkh
