#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lieweights/error.hpp"

namespace lieweights {

enum class AtomKind {
  FiniteSymplectic,     ///< Sp_{2a}(ell); a = 0 is the trivial group
  FiniteGeneralLinear,  ///< GL_c(ell)
  OrderTwo,             ///< C_2
  MinusOrthogonal,      ///< GO^-_{2a+2}(2)
  Named,                ///< an automizer known only by name (exceptional tables)
};

struct Atom {
  AtomKind kind;
  unsigned param = 0;  // a for Sp/GO-, c for GL
  unsigned ell = 0;    // field size for Sp/GL, 2 for GO-, 0 otherwise
  std::string name;    // Named only

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Symbolic description of a quotient N_G(P)/P as a term tree.
///
/// Node kinds are atoms, direct products, wreath products `base wr S_m`, and
/// the index-2 subgroup of a product of wreaths in which the total number of
/// non-trivial C_2 entries is even (the type D automizers). Construction does
/// not validate shape; evaluators report malformed trees.
class Automizer {
 public:
  enum class Kind { Atom, Product, Wreath, EvenC2Diagonal };

  static Automizer atom(Atom a) {
    Automizer n(Kind::Atom);
    n.atom_ = std::move(a);
    return n;
  }
  static Automizer finite_symplectic(unsigned alpha, unsigned ell) {
    return atom({AtomKind::FiniteSymplectic, alpha, ell, {}});
  }
  static Automizer general_linear(unsigned c, unsigned ell) {
    return atom({AtomKind::FiniteGeneralLinear, c, ell, {}});
  }
  static Automizer order_two() { return atom({AtomKind::OrderTwo, 0, 0, {}}); }
  static Automizer minus_orthogonal(unsigned alpha) {
    return atom({AtomKind::MinusOrthogonal, alpha, 2, {}});
  }
  static Automizer named(std::string name) {
    return atom({AtomKind::Named, 0, 0, std::move(name)});
  }

  static Automizer product(std::vector<Automizer> factors) {
    Automizer n(Kind::Product);
    n.children_ = std::move(factors);
    return n;
  }
  static Automizer wreath(Automizer base, unsigned m) {
    Automizer n(Kind::Wreath);
    n.children_.push_back(std::move(base));
    n.multiplicity_ = m;
    return n;
  }
  static Automizer even_c2_diagonal(std::vector<Automizer> wreaths) {
    Automizer n(Kind::EvenC2Diagonal);
    n.children_ = std::move(wreaths);
    return n;
  }

  Kind kind() const noexcept { return kind_; }

  const Atom& atom() const {
    if (kind_ != Kind::Atom) throw structure_error("node is not an atom");
    return atom_;
  }
  std::span<const Automizer> children() const noexcept { return children_; }

  const Automizer& base() const {
    if (kind_ != Kind::Wreath) throw structure_error("node is not a wreath product");
    return children_.front();
  }
  unsigned multiplicity() const {
    if (kind_ != Kind::Wreath) throw structure_error("node is not a wreath product");
    return multiplicity_;
  }

  friend bool operator==(const Automizer&, const Automizer&) = default;

 private:
  explicit Automizer(Kind k) : kind_(k), atom_{AtomKind::Named, 0, 0, {}} {}

  Kind kind_;
  Atom atom_;
  std::vector<Automizer> children_;
  unsigned multiplicity_ = 0;
};

inline std::string to_string(const Atom& a) {
  switch (a.kind) {
    case AtomKind::FiniteSymplectic:
      return "Sp_" + std::to_string(2 * a.param) + "(" + std::to_string(a.ell) + ")";
    case AtomKind::FiniteGeneralLinear:
      return "GL_" + std::to_string(a.param) + "(" + std::to_string(a.ell) + ")";
    case AtomKind::OrderTwo: return "C2";
    case AtomKind::MinusOrthogonal: return "GO-_" + std::to_string(2 * a.param + 2) + "(2)";
    case AtomKind::Named: return a.name;
  }
  return "?";
}

/// Text rendering, e.g. "(C2 x Sp_2(3) x GL_1(3)) wr S_2".
inline std::string to_string(const Automizer& node) {
  auto join = [](std::span<const Automizer> parts, bool wrap_compound) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += " x ";
      const bool compound = parts[i].kind() == Automizer::Kind::Wreath ||
                            (parts[i].kind() == Automizer::Kind::Product &&
                             parts[i].children().size() > 1);
      out += (wrap_compound && compound) ? "(" + to_string(parts[i]) + ")"
                                         : to_string(parts[i]);
    }
    return out;
  };

  switch (node.kind()) {
    case Automizer::Kind::Atom: return to_string(node.atom());
    case Automizer::Kind::Product:
      if (node.children().empty()) return "1";
      return join(node.children(), node.children().size() > 1);
    case Automizer::Kind::Wreath: {
      const Automizer& base = node.base();
      std::string inner = to_string(base);
      const bool compound = base.kind() == Automizer::Kind::Wreath ||
                            (base.kind() == Automizer::Kind::Product &&
                             base.children().size() > 1) ||
                            base.kind() == Automizer::Kind::EvenC2Diagonal;
      if (compound) inner = "(" + inner + ")";
      return inner + " wr S_" + std::to_string(node.multiplicity());
    }
    case Automizer::Kind::EvenC2Diagonal:
      return "even_C2[" + join(node.children(), true) + "]";
  }
  return "?";
}

}  // namespace lieweights
