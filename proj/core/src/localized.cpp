#include "cellcrystal/localized.hpp"

#include "cellcrystal/errors.hpp"

namespace cellcrystal {

LocalizedCrystal::LocalizedCrystal(std::shared_ptr<const BinfTable> table)
    : table_(std::move(table)),
      basis_(h_basis(table_->crystal())),
      w0_(table_->crystal().cartan().longest_element()) {}

void LocalizedCrystal::check_word(const LocalElem& L) const {
  if (L.word != word()) {
    throw DomainError("element of word " + L.word.to_string() + " used with word " + word().to_string());
  }
  crystal().check_elem(L.x);
}

void LocalizedCrystal::check_presentation(const LocalPresentation& p) const {
  if (static_cast<int>(p.c.size()) != crystal().rank()) throw DomainError("coefficient vector has wrong length");
  crystal().check_elem(p.b);
}

LocalElem LocalizedCrystal::element(CellElem x) const {
  crystal().check_elem(x);
  return {word(), std::move(x)};
}

LocalElem LocalizedCrystal::from_pair(const LocalPresentation& p) const {
  check_presentation(p);
  if (!table_->contains(p.b)) throw DomainError("b = " + p.b.to_string() + " is not in B(∞)");
  return {word(), basis_.combine(p.c) + p.b};
}

LocalPresentation LocalizedCrystal::presentation(const LocalElem& L, std::optional<std::int64_t> bound) const {
  check_word(L);
  auto d = decompose(basis_, *table_, L.x, bound);
  return {std::move(d.c), std::move(d.b)};
}

LocalElem LocalizedCrystal::f_loc(const LocalElem& L, int i) const {
  check_word(L);
  return {word(), *crystal().f_tilde(L.x, i)};
}

LocalElem LocalizedCrystal::e_loc(const LocalElem& L, int i) const {
  check_word(L);
  return {word(), *crystal().e_tilde(L.x, i)};
}

LocalElem LocalizedCrystal::e_categorical(const LocalPresentation& p, int i) const {
  check_presentation(p);
  const auto& cr = crystal();
  const int n = cr.rank();
  if (cr.epsilon(p.b, i).value() > 0) {
    CellElem raised = *cr.e_tilde(p.b, i);
    if (!table_->contains(raised)) {
      throw ModelViolation("ẽ_" + std::to_string(i) + " of " + p.b.to_string() + " left B(∞)");
    }
    return {word(), basis_.combine(p.c) + raised};
  }
  // E_i S = 0: peel one C_{Λ_{i*}} off the shift and raise inside it.
  const int j = cr.cartan().i_star(i);
  const CellElem inner = *cr.e_tilde(basis_.h(j) + p.b, i);
  if (!table_->contains(inner)) {
    throw ModelViolation("ẽ_" + std::to_string(i) + "(h_" + std::to_string(j) + " + " + p.b.to_string() +
                         ") = " + inner.to_string() + " is not in B(∞)");
  }
  const Weight shifted = p.lambda() - Weight::fundamental(n, j);
  return {word(), h_of_weight(basis_, shifted) + inner};
}

std::int64_t LocalizedCrystal::eps_loc(const LocalPresentation& p, int i) const {
  check_presentation(p);
  return crystal().epsilon(p.b, i).value() - w0_.apply(p.lambda()).pairing(i);
}

Weight LocalizedCrystal::wt_loc(const LocalPresentation& p) const {
  check_presentation(p);
  const Weight lambda = p.lambda();
  return crystal().weight(p.b) + w0_.apply(lambda) - lambda;
}

std::int64_t LocalizedCrystal::phi_loc(const LocalPresentation& p, int i) const {
  return eps_loc(p, i) + wt_loc(p).pairing(i);
}

std::int64_t LocalizedCrystal::epsilon(const LocalElem& L, int i) const {
  check_word(L);
  return crystal().epsilon(L.x, i).value();
}

std::int64_t LocalizedCrystal::phi(const LocalElem& L, int i) const {
  check_word(L);
  return crystal().phi(L.x, i).value();
}

Weight LocalizedCrystal::weight(const LocalElem& L) const {
  check_word(L);
  return crystal().weight(L.x);
}

LocalElem LocalizedCrystal::oplus(const LocalElem& a, const LocalElem& b) const {
  check_word(a);
  check_word(b);
  return {word(), a.x + b.x};
}

LocalElem LocalizedCrystal::ominus(const LocalElem& a) const {
  check_word(a);
  return {word(), -a.x};
}

}  // namespace cellcrystal
