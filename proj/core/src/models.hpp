#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "coxdesc/coxeter_system.hpp"

namespace coxdesc::detail {

using Payload = GroupElement::Payload;

/// Arithmetic of one faithful representation. Generator indices are 0-based here.
class ElementModel {
 public:
  virtual ~ElementModel() = default;

  virtual ModelKind kind() const = 0;
  virtual int rank() const = 0;
  virtual Payload identity() const = 0;
  virtual Payload generator(int i) const = 0;
  virtual Payload multiply(const Payload& a, const Payload& b) const = 0;
  virtual Payload inverse(const Payload& a) const = 0;
  virtual int length(const Payload& w) const = 0;
  virtual bool right_descent(const Payload& w, int i) const = 0;
  virtual int positive_root_count() const = 0;

  virtual std::uint32_t right_descent_bits(const Payload& w) const;
  virtual std::uint32_t left_descent_bits(const Payload& w) const;
  /// j with d s_t d^-1 = s_j; the default multiplies out and compares payloads.
  virtual std::optional<int> conjugate_simple(const Payload& d, int t) const;
  virtual std::string describe() const = 0;

 protected:
  std::optional<int> match_generator(const Payload& w) const;
};

/// S_{n+1} acting on {1..n+1}; s_i swaps i and i+1.
std::unique_ptr<ElementModel> make_symmetric_model(int rank);
/// Signed permutations of {±1..±n}; s_1 = (-1,1), s_i = (-i,-i+1)(i-1,i).
std::unique_ptr<ElementModel> make_hyperoctahedral_model(int rank);
/// Even signed permutations; s_1 = (-2,1)(-1,2), s_i as in type B for i >= 2.
std::unique_ptr<ElementModel> make_even_signed_model(int rank);
/// Dihedral group of order 2m.
std::unique_ptr<ElementModel> make_dihedral_model(int m);
/// Root-permutation model built from the Coxeter type.
std::unique_ptr<ElementModel> make_root_model(const CoxeterType& type);

}  // namespace coxdesc::detail
