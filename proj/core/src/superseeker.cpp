#include <algorithm>

#include "cykit/diffops/difference.hpp"
#include "cykit/error.hpp"

namespace cykit::diffops {

namespace {

SuperseekerRow row(long abs_d, long d, std::optional<Polynomial> q0, std::string text, std::vector<std::string> ids,
                   std::optional<int> degree, bool garbled, std::string erratum) {
  return SuperseekerRow{abs_d, d, std::move(q0), std::move(text), std::move(ids), degree, garbled, std::move(erratum)};
}

std::vector<SuperseekerRow> make_table() {
  return {
    row(3, -3, Polynomial{19, -23, 7}, "7n^2-23n+19", {"27"}, std::nullopt, false, ""),
    row(3, -3, Polynomial{13, -19, 7}, "7n^2-19n+13", {"243"}, std::nullopt, false, ""),
    row(4, -4, Polynomial{17, -26, 10}, "10n^2-26n+17", {"237", "256"}, 2, false, ""),
    row(5, 5, Polynomial{11, -15, 5}, "5n^2-15n+11", {"253"}, 2, false, ""),
    row(7, -7, Polynomial{22, -35, 14}, "14n^2-35n+22", {"241", "33"}, 2, false, ""),
    row(12, -12, Polynomial{19, -30, 12}, "12n^2-30n+19", {"258"}, 2, false, ""),
    row(12, 12, Polynomial{-1, -2, 2}, "2n^2-2n-1", {"56"}, 3, false, ""),
    row(12, 12, std::nullopt, "2n^2-1+n+11", {"23"}, 3, true, ""),
    row(15, -15, Polynomial{106, -147, 51}, "51n^2-147n+106", {"222"}, 2, false, ""),
    row(15, -15, Polynomial{34, -45, 15}, "15n^2-45n+34", {"216"}, 3, false, ""),
    row(15, -15, Polynomial{38, -55, 20}, "20n^2-55n+38", {"55"}, 2, false, ""),
    row(15, -15, Polynomial{34, -57, 24}, "24n^2-57n+34", {"211"}, 2, false, ""),
    row(16, -16, Polynomial{33, -56, 20}, "20n^2-56n+33", {"119"}, 3, false, "printed D -16 and |D| 16, discriminant of the printed Q_0 is 496"),
    row(20, 20, Polynomial{19, -18, 4}, "4n^2-18n+19", {"262"}, 3, false, ""),
    row(27, -27, Polynomial{37, -63, 27}, "27n^2-63n+37", {"239"}, 2, false, ""),
    row(28, 28, Polynomial{27, -26, 6}, "6n^2-26n+27", {"235"}, 4, false, ""),
    row(32, -32, Polynomial{33, -56, 24}, "24n^2-56n+33", {"265"}, 2, false, ""),
    row(35, -35, Polynomial{29, -49, 21}, "21n^2-49n+29", {"71"}, 3, false, ""),
    row(35, -35, Polynomial{71, -77, 21}, "21n^2-77n+71", {"21"}, 3, false, ""),
    row(37, 37, Polynomial{67, -105, 41}, "41n^2-105n+67", {"300"}, 2, false, ""),
    row(39, -39, Polynomial{33, -51, 20}, "20n^2-51n+33", {"223"}, 3, false, ""),
    row(44, -44, Polynomial{59, -88, 33}, "33n^2-88n+59", {"278"}, 2, false, ""),
    row(44, -44, Polynomial{69, -110, 44}, "44n^2-110n+69", {"238", "288"}, 2, false, ""),
    row(55, -55, Polynomial{142, -209, 77}, "77n^2-209n+142", {"232"}, 2, false, ""),
    row(60, -60, Polynomial{51, -90, 40}, "40n^2-90n+51", {"277"}, 2, false, ""),
    row(60, -60, Polynomial{83, -126, 48}, "48n^2-126n+83", {"210"}, 2, false, ""),
    row(105, 105, Polynomial{40, -45, 12}, "12n^2-45n+40", {"242", "259"}, 3, false, ""),
    row(135, -135, Polynomial{92, -99, 27}, "27n^2-99n+92", {"266"}, 3, false, ""),
    row(140, -100, Polynomial{87, -134, 52}, "52n^2-134n+87", {"282"}, 2, false, "printed D factorization -2^2*5*5 = -100, discriminant is -140"),
    row(160, 160, Polynomial{-3, -8, 8}, "8n^2-8n-3", {"83"}, 3, false, ""),
    row(176, 176, Polynomial{43, -88, 44}, "44n^2-88n+43", {"254", "295"}, std::nullopt, false, ""),
    row(195, -195, Polynomial{163, -235, 85}, "85n^2-235n+163", {"99"}, 2, false, ""),
    row(224, -224, Polynomial{115, -196, 84}, "84n^2-196n+115", {"289"}, 2, false, ""),
    row(231, -231, Polynomial{94, -143, 55}, "55n^2-143n+94", {"117", "118"}, 3, false, ""),
    row(231, -231, Polynomial{160, -187, 55}, "55n^2-187n+160", {"22", "212"}, 3, false, ""),
    row(240, -240, Polynomial{229, -432, 204}, "204n^2-432n+229", {"225"}, 2, false, ""),
    row(252, -252, Polynomial{107, -154, 56}, "56n^2-154n+107", {"215"}, 3, false, ""),
    row(255, -255, Polynomial{308, -327, 87}, "87n^2-327n+308", {"279"}, 3, false, ""),
    row(288, 288, Polynomial{41, -40, 8}, "8n^2-40n+41", {"119"}, 3, false, ""),
    row(320, -320, Polynomial{163, -176, 48}, "48n^2-176n+163", {"246"}, 3, false, ""),
    row(320, -320, Polynomial{67, -112, 48}, "48n^2-112n+67", {"247"}, 3, false, ""),
    row(345, 345, Polynomial{242, -299, 92}, "92n^2-299n+242", {"226"}, 3, false, ""),
    row(385, 385, Polynomial{114, -143, 44}, "44n^2-143n+114", {"219"}, 3, false, ""),
    row(399, -399, Polynomial{824, -969, 285}, "285n^2-969n+824", {"59"}, 3, false, ""),
    row(399, -399, Polynomial{235, -309, 102}, "102n^2-309n+235", {"218"}, 3, false, ""),
    row(455, -455, Polynomial{261, -403, 156}, "156n^2-403n+261", {"109"}, 2, false, ""),
    row(495, -495, Polynomial{254, -415, 170}, "170n^2-415n+254", {"192"}, 2, false, ""),
    row(495, -495, Polynomial{153, -231, 88}, "88n^2-231n+153", {"260"}, 3, false, ""),
    row(640, 640, Polynomial{27, -64, 32}, "32n^2-64n+27", {"261"}, 3, false, ""),
    row(1463, -1463, Polynomial{446, -551, 171}, "171n^2-551n+446", {"198"}, std::nullopt, false, ""),
    row(1564, -1564, Polynomial{235, -414, 184}, "184n^2-414n+235", {"264"}, 2, false, ""),
    row(1664, -1664, Polynomial{419, -780, 364}, "364n^2-780n+419", {"294"}, 2, false, ""),
    row(2156, 2156, Polynomial{313, -370, 110}, "110n^2-370n+313", {"217"}, 3, false, "printed D 2156, discriminant of the printed Q_0 is -820"),
    row(2176, 2176, Polynomial{75, -176, 96}, "96n^2-176n+75", {"276"}, 2, false, ""),
    row(2560, -2560, Polynomial{343, -416, 128}, "128n^2-416n+343", {"275"}, 3, false, ""),
    row(2665, 2665, Polynomial{429, -533, 164}, "164n^2-533n+429", {"274"}, 3, false, ""),
    row(3135, -3135, Polynomial{274, -407, 154}, "154n^2-407n+274", {"231"}, 3, false, ""),
    row(3335, -3335, Polynomial{378, -551, 203}, "203n^2-551n+378", {"224"}, 3, false, ""),
    row(4180, 4180, Polynomial{249, -484, 231}, "231n^2-484n+249", {"230"}, 3, false, ""),
    row(5831, -5831, Polynomial{795, -1037, 340}, "340n^2-1037n+795", {"234"}, 3, false, ""),
    row(9204, 9204, Polynomial{763, -944, 295}, "295n^2-944n+763", {"248"}, 3, false, "printed D 9204, discriminant is -9204"),
    row(14400, -14400, Polynomial{773, -936, 288}, "288n^2-936n+773", {"249"}, 3, false, ""),
    row(17199, -17199, Polynomial{1125, -1599, 572}, "572n^2-1599n+1125", {"297"}, 3, false, ""),
    row(17415, -17415, Polynomial{869, -1053, 324}, "324n^2-1053n+869", {"273"}, 3, false, ""),
    row(39767, -39767, Polynomial{1647, -2405, 884}, "884n^2-2405n+1647", {"208"}, 3, false, ""),
    row(44591, -44591, Polynomial{1830, -2623, 946}, "946n^2-2623n+1830", {"209"}, 3, false, ""),
    row(60480, 60480, Polynomial{1487, -1584, 432}, "432n^2-1584n+1487", {"268"}, 3, false, "printed D 60480, discriminant is -60480"),
    row(64496, -64496, Polynomial{1989, -3712, 1740}, "1740n^2-3712n+1989", {"305"}, 2, false, ""),
    row(64844, -64844, Polynomial{1761, -2378, 812}, "812n^2-2378n+1761", {"240"}, 2, false, ""),
    row(104719, -104719, Polynomial{4240, -5191, 1595}, "1595n^2-5191n+4240", {"19"}, 3, false, ""),
    row(170375, 170375, Polynomial{3168, -4277, 1457}, "1457n^2-4277n+3168", {"195"}, std::nullopt, false, "printed D 170375, discriminant is -170375"),
    row(702075, -702075, Polynomial{3361, -4807, 1771}, "1771n^2-4807n+3361", {"252"}, 3, false, ""),
    row(959040, -959040, Polynomial{6937, -8424, 2592}, "2592n^2-8424n+6937", {"272"}, 3, false, ""),
    row(5274751, 5274751, Polynomial{13342, -18565, 6557}, "6557n^2-18565n+13342", {"250"}, 3, false, "printed D 5274751, discriminant is -5274751"),
  };
}

Integer floor_mod(const Integer& b, const Integer& m) {
  Integer r = b % m;
  if (r < 0) r += m;
  return r;
}

std::optional<QuadraticSignature> signature_of_leading(const Polynomial& lead) {
  Polynomial rest = lead;
  for (const auto& [root, mult] : exact::rational_roots(lead)) {
    if (mult < 4) continue;
    rest = exact::divmod(rest, exact::pow(Polynomial::linear_root(root), static_cast<unsigned>(mult))).quotient;
  }
  if (rest.degree() != 2) return std::nullopt;
  return quadratic_signature(rest);
}

}  // namespace

QuadraticSignature quadratic_signature(const Polynomial& q) {
  if (q.degree() != 2) throw DomainError("superseeker signature needs a quadratic, got degree " + std::to_string(q.degree()));
  Polynomial p = q * (1 / q.content());
  if (p.leading() < 0) p = -p;
  Integer a = p[2].get_num();
  Integer b = p[1].get_num();
  Integer c = p[0].get_num();
  return QuadraticSignature{p, a, b * b - 4 * a * c, floor_mod(b, 2 * a)};
}

std::optional<QuadraticSignature> superseeker_signature(const DifferenceOperator& op) {
  if (op.is_zero()) return std::nullopt;
  return signature_of_leading(op.leading());
}

std::optional<QuadraticSignature> superseeker_signature(const ThetaOperator& op) {
  return superseeker_signature(de_to_diff(op));
}

std::span<const SuperseekerRow> superseeker_table() {
  static const std::vector<SuperseekerRow> table = make_table();
  return table;
}

std::vector<std::string> superseeker_lookup(const QuadraticSignature& sig) {
  std::vector<std::string> ids;
  for (const auto& r : superseeker_table()) {
    if (!r.q0) continue;
    auto s = quadratic_signature(*r.q0);
    if (s.a == sig.a && s.discriminant == sig.discriminant && s.b_canonical == sig.b_canonical)
      ids.insert(ids.end(), r.ids.begin(), r.ids.end());
  }
  return ids;
}

}  // namespace cykit::diffops
