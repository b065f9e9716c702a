#include "dalg/ranking.hpp"

#include "dalg/errors.hpp"

namespace dalg {

RankProfile rank_profile(const DiffPoly& a, Indet main) {
  if (a.is_zero()) throw zero_polynomial("rank argument");
  RankProfile p;
  auto order = a.order_in(main);
  if (!order) return p;
  p.kind = RankProfile::Kind::Proper;
  p.order = *order;
  p.leader = DerivVar{main, *order};
  p.degree = a.degree_in(p.leader);
  return p;
}

namespace {

RankProfile proper_profile(const DiffPoly& a, Indet main, const char* what) {
  auto p = rank_profile(a, main);
  if (!p.is_proper()) throw constant_polynomial(what);
  return p;
}

}  // namespace

DiffPoly initial(const DiffPoly& a, Indet main) {
  auto p = proper_profile(a, main, "initial argument");
  return a.coefficients_in(p.leader).back();
}

DiffPoly separant(const DiffPoly& a, Indet main) {
  auto p = proper_profile(a, main, "separant argument");
  return a.partial(p.leader);
}

RankOrder rank_compare(const DiffPoly& a, const DiffPoly& b, Indet main) {
  auto pa = rank_profile(a, main);
  auto pb = rank_profile(b, main);
  if (!pa.is_proper() || !pb.is_proper()) {
    if (pa.is_proper() == pb.is_proper()) return RankOrder::Equivalent;
    return pa.is_proper() ? RankOrder::Greater : RankOrder::Less;
  }
  auto ka = std::pair{pa.order, pa.degree};
  auto kb = std::pair{pb.order, pb.degree};
  if (ka < kb) return RankOrder::Less;
  if (kb < ka) return RankOrder::Greater;
  return RankOrder::Equivalent;
}

const char* to_string(RankOrder order) {
  switch (order) {
    case RankOrder::Less: return "less";
    case RankOrder::Equivalent: return "equivalent";
    case RankOrder::Greater: return "greater";
  }
  return "?";
}

}  // namespace dalg
