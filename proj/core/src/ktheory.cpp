#include "rootadj/ktheory.hpp"

#include <algorithm>

#include "rootadj/errors.hpp"

namespace rootadj {

namespace {

void requireLargePrime(long long p) {
  if (p <= 3 || !isPrime(p)) {
    fail("SmallPrime", "the explicit K-theory tables need a prime p > 3");
  }
}

} // namespace

NamedModuleTable tableKKu(long long p) {
  requireLargePrime(p);
  NamedModuleTable t;
  t.name = "V(1)_*K(ku_" + std::to_string(p) + ")";
  t.p = p;
  t.weightModulus = p - 1;
  WeightMonoid wm(p - 1);
  auto cls = [&](std::string name, long long deg, long long wt) {
    return NamedClass{std::move(name), deg, wm.normalize(wt)};
  };

  NamedClass b = cls("b", 2 * p + 2, 1);
  NamedClass lambda1 = cls("lambda1", 2 * p - 1, 0);
  NamedClass a1 = cls("a1", 2 * p + 3, 1);

  // F_p[b] (x) Lambda(lambda1, a1)
  t.summands.push_back(TableSummand{b, {lambda1, a1}, {cls("1", 0, 0)}});

  // F_p[b] (x) F_p{partial-classes}
  t.summands.push_back(TableSummand{
      b,
      {},
      {cls("partial(lambda1)", 2 * p - 2, 0),
       cls("partial(b)", 2 * p + 1, 1), cls("partial(a1)", 2 * p + 2, 1),
       cls("partial(lambda1*a1)", 4 * p + 1, 1)}});

  // F_p[b] (x) Lambda(a1) (x) F_p{t^d lambda1, 0 < d < p}
  {
    TableSummand s{b, {a1}, {}};
    for (long long d = 1; d < p; ++d) {
      s.generators.push_back(
          cls("t^" + std::to_string(d) + "*lambda1", 2 * p - 1 - 2 * d, 0));
    }
    t.summands.push_back(std::move(s));
  }

  // F_p[b] (x) Lambda(lambda1) (x) F_p{sigma_n, lambda2 t^(p^2-p)}
  {
    TableSummand s{b, {lambda1}, {}};
    for (long long n = 1; n <= p - 2; ++n) {
      s.generators.push_back(cls("sigma" + std::to_string(n), 2 * n + 1, n));
    }
    s.generators.push_back(
        cls("lambda2*t^" + std::to_string(p * p - p), 2 * p - 1, 0));
    t.summands.push_back(std::move(s));
  }

  t.singletons.push_back(cls("s", 2 * p - 3, 0));
  t.notes.push_back("F_p[b]-module; b^(p-1) = -v2 (telescope metadata only)");
  return t;
}

NamedModuleTable tableKKo(long long p) {
  requireLargePrime(p);
  NamedModuleTable t;
  t.name = "V(1)_*K(ko_" + std::to_string(p) + ")";
  t.p = p;
  t.weightModulus = p - 1;
  WeightMonoid wm(p - 1);
  auto cls = [&](std::string name, long long deg, long long wt) {
    return NamedClass{std::move(name), deg, wm.normalize(wt)};
  };

  NamedClass b2 = cls("b^2", 4 * p + 4, 2);
  NamedClass lambda1 = cls("lambda1", 2 * p - 1, 0);
  NamedClass ba1 = cls("b*a1", 4 * p + 5, 2);

  t.summands.push_back(TableSummand{b2, {lambda1, ba1}, {cls("1", 0, 0)}});

  t.summands.push_back(TableSummand{
      b2,
      {},
      {cls("partial(lambda1)", 2 * p - 2, 0),
       cls("b*partial(b)", 4 * p + 3, 2), cls("b*partial(a1)", 4 * p + 4, 2),
       cls("b*partial(lambda1*a1)", 6 * p + 3, 2)}});

  {
    TableSummand s{b2, {ba1}, {}};
    for (long long d = 1; d < p; ++d) {
      s.generators.push_back(
          cls("t^" + std::to_string(d) + "*lambda1", 2 * p - 1 - 2 * d, 0));
    }
    t.summands.push_back(std::move(s));
  }

  {
    // b^eps(n) sigma_n with eps(n) = 1 for odd n, so every class lands in
    // even weight mod p-1.
    TableSummand s{b2, {lambda1}, {}};
    for (long long n = 1; n <= p - 2; ++n) {
      if (n % 2 == 1) {
        s.generators.push_back(
            cls("b*sigma" + std::to_string(n), 2 * n + 1 + 2 * p + 2, n + 1));
      } else {
        s.generators.push_back(cls("sigma" + std::to_string(n), 2 * n + 1, n));
      }
    }
    s.generators.push_back(
        cls("lambda2*t^" + std::to_string(p * p - p), 2 * p - 1, 0));
    t.summands.push_back(std::move(s));
  }

  t.singletons.push_back(cls("s", 2 * p - 3, 0));
  t.notes.push_back(
      "F_p[b^2]-module; (b^2)^((p-1)/2) = -v2 (telescope metadata only)");
  return t;
}

BasisTable enumerateTable(const NamedModuleTable& t, long long degLo,
                          long long degHi) {
  if (degLo > degHi) fail("WindowMismatch", "empty degree window");
  WeightMonoid weights(t.weightModulus);
  BasisTable out;
  out.modulus = t.weightModulus;
  out.degLo = degLo;
  out.degHi = degHi;

  auto push = [&](long long deg, long long wt, const std::string& label) {
    if (deg < degLo || deg > degHi) return;
    out.entries[Bidegree{deg, weights.normalize(wt)}].push_back(label);
  };

  for (const auto& s : t.summands) {
    if (s.polyBase.deg <= 0) {
      fail("InfiniteSlice", "polyBase '" + s.polyBase.name +
                                "' must have positive degree");
    }
    long long minExtra = 0;
    for (const auto& g : s.generators) minExtra = std::min(minExtra, g.deg);
    for (long long j = 0;; ++j) {
      long long degB = j * s.polyBase.deg;
      if (degB + minExtra > degHi) break;
      const std::size_t nExt = s.exteriorFactors.size();
      for (std::size_t mask = 0; mask < (1u << nExt); ++mask) {
        long long degE = 0, wtE = 0;
        std::vector<std::string> extParts;
        for (std::size_t i = 0; i < nExt; ++i) {
          if (!(mask & (1u << i))) continue;
          degE += s.exteriorFactors[i].deg;
          wtE += s.exteriorFactors[i].wt;
          extParts.push_back(s.exteriorFactors[i].name);
        }
        for (const auto& g : s.generators) {
          long long deg = degB + degE + g.deg;
          long long wt = j * s.polyBase.wt + wtE + g.wt;
          std::vector<std::string> parts;
          if (j == 1) parts.push_back(s.polyBase.name);
          if (j > 1) parts.push_back(s.polyBase.name + "^" + std::to_string(j));
          parts.insert(parts.end(), extParts.begin(), extParts.end());
          if (g.name != "1") parts.push_back(g.name);
          std::string label;
          for (const auto& part : parts) {
            if (!label.empty()) label += "*";
            label += part;
          }
          if (label.empty()) label = "1";
          push(deg, wt, label);
        }
      }
    }
  }
  for (const auto& g : t.singletons) push(g.deg, g.wt, g.name);
  return out;
}

BasisTable weightPiece(const NamedModuleTable& t, long long i, long long degLo,
                       long long degHi) {
  if (i < 0 || i >= t.weightModulus) {
    fail("BadWeight", "weight " + std::to_string(i) + " outside Z/" +
                          std::to_string(t.weightModulus));
  }
  BasisTable full = enumerateTable(t, degLo, degHi);
  BasisTable out;
  out.modulus = full.modulus;
  out.degLo = degLo;
  out.degHi = degHi;
  for (const auto& [b, labels] : full.entries) {
    if (b.wt == i) out.entries[b] = labels;
  }
  return out;
}

BasisTable reassemble(const NamedModuleTable& t,
                      const std::set<long long>& weightSet, long long degLo,
                      long long degHi) {
  bool allEven = true;
  for (long long w : weightSet) {
    if (w < 0 || w >= t.weightModulus) {
      fail("BadWeight", "weight " + std::to_string(w) + " outside Z/" +
                            std::to_string(t.weightModulus));
    }
    allEven = allEven && (w % 2 == 0);
  }
  BasisTable full = enumerateTable(t, degLo, degHi);
  BasisTable out;
  out.degLo = degLo;
  out.degHi = degHi;
  if (allEven && t.weightModulus % 2 == 0) {
    out.modulus = t.weightModulus / 2;
  } else {
    allEven = false;
    out.modulus = t.weightModulus;
  }
  for (const auto& [b, labels] : full.entries) {
    if (weightSet.find(b.wt) == weightSet.end()) continue;
    Bidegree key = allEven ? Bidegree{b.deg, b.wt / 2} : b;
    auto& slot = out.entries[key];
    slot.insert(slot.end(), labels.begin(), labels.end());
  }
  return out;
}

BasisTable halveWeights(const BasisTable& t) {
  if (t.modulus % 2 != 0 || t.modulus == 0) {
    fail("BadWeight", "halving needs an even modulus");
  }
  BasisTable out;
  out.modulus = t.modulus / 2;
  out.degLo = t.degLo;
  out.degHi = t.degHi;
  for (const auto& [b, labels] : t.entries) {
    if (b.wt % 2 != 0) {
      fail("BadWeight", "entry at odd weight " + formatBidegree(b));
    }
    out.entries[Bidegree{b.deg, b.wt / 2}] = labels;
  }
  return out;
}

WeightedBasisReport weightReport(const NamedModuleTable& t, long long degLo,
                                 long long degHi) {
  WeightedBasisReport rep;
  rep.provenance = t.name;
  rep.degLo = degLo;
  rep.degHi = degHi;
  for (long long w = 0; w < t.weightModulus; ++w) {
    rep.pieces.push_back({w, weightPiece(t, w, degLo, degHi)});
  }
  return rep;
}

T2Presentation t2Presentation(long long p, const std::string& flavor) {
  requireLargePrime(p);
  T2Presentation out;
  out.p = p;
  out.flavor = flavor;
  out.baseRing = "T(2)_*K(ell_" + std::to_string(p) + ")";
  if (flavor == "ku") {
    out.generator = "b";
    out.exponent = p - 1;
    out.relation = "b^" + std::to_string(p - 1) + " + v2 = 0";
    out.display = "T(2)_*K(ku_" + std::to_string(p) + ") = " + out.baseRing +
                  "[b]/(b^" + std::to_string(p - 1) + " + v2)";
  } else if (flavor == "ko") {
    out.generator = "b^2";
    out.exponent = (p - 1) / 2;
    out.relation =
        "(b^2)^" + std::to_string((p - 1) / 2) + " + v2 = 0";
    out.display = "T(2)_*K(ko_" + std::to_string(p) + ") = " + out.baseRing +
                  "[b^2]/((b^2)^" + std::to_string((p - 1) / 2) + " + v2)";
  } else {
    fail("UnknownPreset", "t2 presentation flavor must be 'ku' or 'ko'");
  }
  return out;
}

std::string renderNamedTableText(const NamedModuleTable& t) {
  std::string out = t.name + "  (weights mod " +
                    std::to_string(t.weightModulus) + ")\n";
  auto pad = [](const std::string& s, std::size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
  };
  auto padNum = [](long long v, std::size_t w) {
    std::string s = std::to_string(v);
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
  };
  int idx = 0;
  for (const auto& s : t.summands) {
    ++idx;
    std::string head = "summand " + std::to_string(idx) + ": F_" +
                       std::to_string(t.p) + "[" + s.polyBase.name + "]";
    if (!s.exteriorFactors.empty()) {
      head += " (x) Lambda(";
      for (std::size_t i = 0; i < s.exteriorFactors.size(); ++i) {
        if (i) head += ", ";
        head += s.exteriorFactors[i].name;
      }
      head += ")";
    }
    out += head + "\n";
    auto row = [&](const NamedClass& c) {
      out += "  " + pad(c.name, 28) + padNum(c.deg, 6) + padNum(c.wt, 4) + "\n";
    };
    row(s.polyBase);
    for (const auto& c : s.exteriorFactors) row(c);
    for (const auto& c : s.generators) {
      if (c.name != "1") row(c);
    }
  }
  if (!t.singletons.empty()) {
    out += "singletons:\n";
    for (const auto& c : t.singletons) {
      out += "  " + pad(c.name, 28) + padNum(c.deg, 6) + padNum(c.wt, 4) + "\n";
    }
  }
  for (const auto& n : t.notes) out += "note: " + n + "\n";
  return out;
}

} // namespace rootadj
