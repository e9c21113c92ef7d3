#include "cellcrystal/hlattice.hpp"

#include "cellcrystal/errors.hpp"

namespace cellcrystal {

CellElem HBasis::combine(std::span<const std::int64_t> c) const {
  if (static_cast<int>(c.size()) != rank()) throw DomainError("coefficient vector has wrong length");
  CellElem out = CellElem::zero(word.size());
  for (int i = 1; i <= rank(); ++i) out += c[static_cast<std::size_t>(i - 1)] * h(i);
  return out;
}

CellElem h_exponents(const Word& word, const Weight& lambda) {
  const auto& cd = word.cartan();
  if (lambda.rank() != cd.rank()) throw DomainError("weight rank does not match word type");
  std::vector<std::int64_t> m(static_cast<std::size_t>(word.size()));
  Weight mu = lambda;
  for (int k = word.size(); k >= 1; --k) {
    m[static_cast<std::size_t>(k - 1)] = mu.pairing(word.at(k));
    mu = cd.reflect(word.at(k), mu);
  }
  return CellElem(std::move(m));
}

HBasis h_basis(const CellCrystal& crystal) {
  if (!is_reduced_longest(crystal.word())) {
    throw DomainError("ℋ basis needs a reduced word for w_0; got " + crystal.word().to_string());
  }
  HBasis basis{crystal.word(), {}};
  const int n = crystal.rank();
  for (int i = 1; i <= n; ++i) basis.vectors.push_back(h_exponents(crystal.word(), Weight::fundamental(n, i)));
  return basis;
}

CellElem h_of_weight(const HBasis& basis, const Weight& lambda) {
  if (lambda.rank() != basis.rank()) throw DomainError("weight rank does not match basis");
  return basis.combine(lambda.coeffs());
}

CellElem h_of_weight(const CellCrystal& crystal, const Weight& lambda) {
  return h_of_weight(h_basis(crystal), lambda);
}

bool in_h(const CellCrystal& crystal, const CellElem& x) {
  crystal.check_elem(x);
  for (int k = 1; k <= crystal.size(); ++k) {
    if (crystal.successor(k) && crystal.beta(x, k) != 0) return false;
  }
  return true;
}

}  // namespace cellcrystal
