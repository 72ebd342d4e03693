#include "rinehart/derivation.hpp"

#include <utility>

namespace rinehart {

Derivation::Derivation(std::map<Var, Poly> images) : images_(std::move(images)) {
  for (auto it = images_.begin(); it != images_.end();) {
    if (it->second.is_zero()) {
      it = images_.erase(it);
    } else {
      ++it;
    }
  }
}

Poly Derivation::apply(const Poly& p) const {
  Poly out = Poly::zero();
  for (const auto& [var, image] : images_) {
    out += image * p.partial(var);
  }
  return out;
}

Poly Derivation::image_of(const Var& v) const {
  auto it = images_.find(v);
  return it == images_.end() ? Poly::zero() : it->second;
}

Derivation Derivation::operator+(const Derivation& rhs) const {
  std::map<Var, Poly> images = images_;
  for (const auto& [var, image] : rhs.images_) {
    auto it = images.find(var);
    if (it == images.end()) {
      images.emplace(var, image);
    } else {
      it->second += image;
    }
  }
  return Derivation(std::move(images));
}

Derivation Derivation::operator-(const Derivation& rhs) const { return *this + (-rhs); }

Derivation Derivation::operator-() const {
  std::map<Var, Poly> images;
  for (const auto& [var, image] : images_) {
    images.emplace(var, -image);
  }
  return Derivation(std::move(images));
}

Derivation operator*(const Poly& a, const Derivation& d) {
  std::map<Var, Poly> images;
  for (const auto& [var, image] : d.images_) {
    images.emplace(var, a * image);
  }
  return Derivation(std::move(images));
}

Derivation commutator(const Derivation& a, const Derivation& b) {
  // A commutator of derivations is determined by its values on the union of
  // the two generator sets; everything else maps to zero on both sides.
  std::map<Var, Poly> images;
  for (const auto& [var, image] : a.images()) {
    images.emplace(var, Poly::zero());
  }
  for (const auto& [var, image] : b.images()) {
    images.emplace(var, Poly::zero());
  }
  for (auto& [var, image] : images) {
    image = a.apply(b.image_of(var)) - b.apply(a.image_of(var));
  }
  return Derivation(std::move(images));
}

}  // namespace rinehart
