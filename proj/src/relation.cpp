#include <sym3inv/relation.hpp>

#include <sstream>
#include <stdexcept>

namespace sym3 {

std::vector<Inv> basis_members(Basis basis) {
  std::vector<Inv> out;
  for (int i = 0; i < kInvariantCount; ++i) {
    const auto id = static_cast<Inv>(i);
    if (basis_contains(basis, id)) out.push_back(id);
  }
  return out;
}

bool basis_contains(Basis basis, Inv id) {
  return basis == Basis::Thirteen || (id != Inv::K6 && id != Inv::I8);
}

std::string_view basis_name(Basis basis) { return basis == Basis::Thirteen ? "thirteen" : "eleven"; }

int ProductTerm::weighted_degree() const {
  int d = 0;
  for (int i = 0; i < kInvariantCount; ++i) d += exponents[i] * kInvariantInfo[i].degree;
  return d;
}

int ProductTerm::u_degree() const {
  int d = 0;
  for (int i = 0; i < kInvariantCount; ++i) d += exponents[i] * kInvariantInfo[i].u_degree;
  return d;
}

bool ProductTerm::uses_only(Basis basis) const {
  for (int i = 0; i < kInvariantCount; ++i)
    if (exponents[i] > 0 && !basis_contains(basis, static_cast<Inv>(i))) return false;
  return true;
}

std::string ProductTerm::to_string() const {
  std::string out;
  for (int i = 0; i < kInvariantCount; ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += kInvariantInfo[i].name;
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

ProductTerm ProductTerm::parse(std::string_view text) {
  ProductTerm term;
  std::istringstream in{std::string(text)};
  std::string factor;
  while (in >> factor) {
    if (factor == "1") continue;
    const auto caret = factor.find('^');
    const std::string name = factor.substr(0, caret);
    const auto id = invariant_from_name(name);
    if (!id) throw std::invalid_argument("unknown invariant '" + name + "'");
    int exp = 1;
    if (caret != std::string::npos) {
      exp = std::stoi(factor.substr(caret + 1));
      if (exp < 1) throw std::invalid_argument("bad exponent in '" + factor + "'");
    }
    term.exponents[static_cast<int>(*id)] += exp;
  }
  return term;
}

SyzygyRelation::SyzygyRelation(std::string name, Basis basis, std::vector<Term> terms)
    : name_(std::move(name)), basis_(basis), terms_(std::move(terms)) {
  if (terms_.size() < 2) throw std::invalid_argument(name_ + ": a relation needs at least two terms");
  degree_ = terms_.front().product.weighted_degree();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (sgn(t.coefficient) == 0) throw std::invalid_argument(name_ + ": zero coefficient");
    if (t.product.weighted_degree() != degree_)
      throw std::invalid_argument(name_ + ": term '" + t.product.to_string() + "' has degree " +
                                  std::to_string(t.product.weighted_degree()) + ", expected " +
                                  std::to_string(degree_));
    if (!t.product.uses_only(basis_))
      throw std::invalid_argument(name_ + ": term '" + t.product.to_string() + "' leaves the basis");
    for (std::size_t j = 0; j < i; ++j)
      if (terms_[j].product == t.product)
        throw std::invalid_argument(name_ + ": duplicate term '" + t.product.to_string() + "'");
  }
}

ExactScalar SyzygyRelation::coefficient_of(const ProductTerm& product) const {
  for (const auto& t : terms_)
    if (t.product == product) return t.coefficient;
  return ExactScalar(0);
}

SyzygyRelation relation_from_table(std::string name, Basis basis,
                                   const std::vector<std::pair<std::string_view, std::string_view>>& table) {
  std::vector<SyzygyRelation::Term> terms;
  terms.reserve(table.size());
  for (const auto& [coef, product] : table)
    terms.push_back({parse_rational(coef), ProductTerm::parse(product)});
  return SyzygyRelation(std::move(name), basis, std::move(terms));
}

}  // namespace sym3
