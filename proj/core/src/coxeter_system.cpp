#include "coxdesc/coxeter_system.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "coxdesc/errors.hpp"
#include "models.hpp"

namespace coxdesc {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Symmetric:
      return "symmetric";
    case ModelKind::Hyperoctahedral:
      return "hyperoctahedral";
    case ModelKind::EvenSigned:
      return "even-signed";
    case ModelKind::Dihedral:
      return "dihedral";
    case ModelKind::Roots:
      return "roots";
  }
  return "?";
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (auto c = a.system_id_ <=> b.system_id_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.payload_.begin(), a.payload_.end(), b.payload_.begin(),
                                                b.payload_.end());
}

std::size_t GroupElementHash::operator()(const GroupElement& w) const noexcept {
  // FNV-1a over the payload
  std::uint64_t h = 1469598103934665603ull ^ w.system_id();
  for (auto v : w.payload()) {
    h ^= static_cast<std::uint16_t>(v);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

struct CoxeterSystem::Impl {
  CoxeterType type;
  CoxeterMatrix matrix;
  BigInt order;
  std::unique_ptr<detail::ElementModel> model;
  std::uint64_t id = 0;
};

namespace {

std::atomic<std::uint64_t> next_system_id{1};

ModelKind default_model(const CoxeterType& type) {
  switch (type.family) {
    case Family::A:
      return ModelKind::Symmetric;
    case Family::B:
      return ModelKind::Hyperoctahedral;
    case Family::D:
      return ModelKind::EvenSigned;
    case Family::I2:
      return ModelKind::Dihedral;
    default:
      return ModelKind::Roots;
  }
}

}  // namespace

CoxeterSystem CoxeterSystem::build(const CoxeterType& type) { return build(type, default_model(type)); }

CoxeterSystem CoxeterSystem::build(const CoxeterType& raw_type, ModelKind kind) {
  const CoxeterType type = CoxeterType::make(raw_type.family, raw_type.rank, raw_type.dihedral_m);
  auto impl = std::make_shared<Impl>();
  impl->type = type;
  impl->matrix = type.coxeter_matrix();
  impl->order = type.order();
  impl->id = next_system_id.fetch_add(1);

  auto unsupported = [&] {
    return InvalidArgument("model '" + to_string(kind) + "' is not available for type " + type.label());
  };
  switch (kind) {
    case ModelKind::Symmetric:
      if (type.family != Family::A) throw unsupported();
      impl->model = detail::make_symmetric_model(type.rank);
      break;
    case ModelKind::Hyperoctahedral:
      if (type.family != Family::B) throw unsupported();
      impl->model = detail::make_hyperoctahedral_model(type.rank);
      break;
    case ModelKind::EvenSigned:
      if (type.family != Family::D) throw unsupported();
      impl->model = detail::make_even_signed_model(type.rank);
      break;
    case ModelKind::Dihedral:
      if (type.family != Family::I2) throw unsupported();
      impl->model = detail::make_dihedral_model(type.dihedral_m);
      break;
    case ModelKind::Roots:
      if (type.family == Family::I2 && type.dihedral_m > 6) throw unsupported();
      impl->model = detail::make_root_model(type);
      break;
  }
  return CoxeterSystem(std::move(impl));
}

const CoxeterType& CoxeterSystem::type() const { return impl_->type; }
int CoxeterSystem::rank() const { return impl_->type.rank; }
const CoxeterMatrix& CoxeterSystem::coxeter_matrix() const { return impl_->matrix; }
BigInt CoxeterSystem::order() const { return impl_->order; }
ModelKind CoxeterSystem::model() const { return impl_->model->kind(); }
std::uint64_t CoxeterSystem::id() const { return impl_->id; }
int CoxeterSystem::positive_root_count() const { return impl_->model->positive_root_count(); }

GroupElement CoxeterSystem::wrap(GroupElement::Payload p) const { return GroupElement(impl_->id, std::move(p)); }

void CoxeterSystem::check_owned(const GroupElement& w) const {
  if (w.system_id() != impl_->id) {
    throw SystemMismatch("element does not belong to the system " + impl_->type.label());
  }
}

void CoxeterSystem::check_generator(int i) const {
  if (i < 1 || i > rank()) {
    throw InvalidArgument("generator index " + std::to_string(i) + " outside 1.." + std::to_string(rank()));
  }
}

GroupElement CoxeterSystem::identity() const { return wrap(impl_->model->identity()); }

GroupElement CoxeterSystem::generator(int i) const {
  check_generator(i);
  return wrap(impl_->model->generator(i - 1));
}

GroupElement CoxeterSystem::multiply(const GroupElement& a, const GroupElement& b) const {
  check_owned(a);
  check_owned(b);
  return wrap(impl_->model->multiply(a.payload_, b.payload_));
}

GroupElement CoxeterSystem::inverse(const GroupElement& a) const {
  check_owned(a);
  return wrap(impl_->model->inverse(a.payload_));
}

int CoxeterSystem::length(const GroupElement& w) const {
  check_owned(w);
  return impl_->model->length(w.payload_);
}

bool CoxeterSystem::has_right_ascent(const GroupElement& w, int i) const {
  check_owned(w);
  check_generator(i);
  return !impl_->model->right_descent(w.payload_, i - 1);
}

bool CoxeterSystem::has_left_ascent(const GroupElement& w, int i) const {
  check_generator(i);
  return !left_descents(w).contains(i);
}

SubsetMask CoxeterSystem::right_descents(const GroupElement& w) const {
  check_owned(w);
  return SubsetMask(impl_->model->right_descent_bits(w.payload_));
}

SubsetMask CoxeterSystem::left_descents(const GroupElement& w) const {
  check_owned(w);
  return SubsetMask(impl_->model->left_descent_bits(w.payload_));
}

std::optional<int> CoxeterSystem::simple_reflection_index(const GroupElement& w) const {
  check_owned(w);
  for (int j = 1; j <= rank(); ++j) {
    if (w.payload_ == impl_->model->generator(j - 1)) return j;
  }
  return std::nullopt;
}

std::optional<int> CoxeterSystem::conjugate_simple(const GroupElement& d, int t) const {
  check_owned(d);
  check_generator(t);
  auto j = impl_->model->conjugate_simple(d.payload_, t - 1);
  if (j) return *j + 1;
  return std::nullopt;
}

std::optional<int> CoxeterSystem::conjugate_by(int t, const GroupElement& y) const {
  return conjugate_simple(inverse(y), t);
}

SubsetMask CoxeterSystem::conjugate_intersection(SubsetMask K, const GroupElement& y, SubsetMask J) const {
  SubsetMask out;
  for (int t : J.indices()) {
    auto j = conjugate_simple(y, t);
    if (j && K.contains(*j)) out = out.with(t);
  }
  return out;
}

GroupElement CoxeterSystem::from_word(std::span<const int> word) const {
  auto p = impl_->model->identity();
  for (int i : word) {
    check_generator(i);
    p = impl_->model->multiply(p, impl_->model->generator(i - 1));
  }
  return wrap(std::move(p));
}

GroupElement CoxeterSystem::parse_word(std::string_view text) const {
  std::vector<int> word;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || used == 0) throw InvalidArgument("malformed word token '" + token + "'");
    word.push_back(value);
  }
  return from_word(word);
}

std::vector<int> CoxeterSystem::reduced_word(const GroupElement& w) const {
  check_owned(w);
  std::vector<int> word;
  auto p = w.payload_;
  while (true) {
    const std::uint32_t bits = impl_->model->left_descent_bits(p);
    if (bits == 0) break;
    int s = 0;
    while (!((bits >> s) & 1u)) ++s;
    word.push_back(s + 1);
    p = impl_->model->multiply(impl_->model->generator(s), p);
  }
  return word;
}

std::string CoxeterSystem::format_word(const GroupElement& w) const {
  std::string out;
  for (int s : reduced_word(w)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s);
  }
  return out;
}

GroupElement CoxeterSystem::longest_element(SubsetMask K) const {
  if (!K.fits(rank())) throw InvalidArgument("subset " + K.to_string() + " exceeds rank " + std::to_string(rank()));
  auto p = impl_->model->identity();
  const auto gens = K.indices();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s : gens) {
      if (!impl_->model->right_descent(p, s - 1)) {
        p = impl_->model->multiply(p, impl_->model->generator(s - 1));
        grew = true;
      }
    }
  }
  return wrap(std::move(p));
}

GroupElement CoxeterSystem::coset_rep_d(SubsetMask J, SubsetMask K) const {
  if (!J.is_subset_of(K)) {
    throw InvalidArgument("d_J^K needs J ⊆ K, got J = " + J.to_string() + ", K = " + K.to_string());
  }
  return multiply(longest_element(J), longest_element(K));
}

std::string CoxeterSystem::format_payload(const GroupElement& w) const {
  check_owned(w);
  std::string out = "[";
  for (std::size_t k = 0; k < w.payload_.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(w.payload_[k]);
  }
  return out + "]";
}

}  // namespace coxdesc
