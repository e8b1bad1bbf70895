#ifndef CCONES_MALL_HPP
#define CCONES_MALL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "ccones/cone.hpp"

namespace ccones {

// A positive linear map between objects, stored as a (target.dim x
// source.dim) matrix in ambient coordinates. Positivity is checked on
// construction; the norm is computed on first request and cached.
class Morphism {
 public:
  Morphism(ConeObject source, ConeObject target, MatQ matrix);

  const ConeObject& source() const { return source_; }
  const ConeObject& target() const { return target_; }
  const MatQ& matrix() const { return matrix_; }

  VecQ apply(const VecQ& x) const { return matrix_.apply(x); }

  // sup over the source ball of the target norm, i.e. the max of <phi, L u>
  // over primal generators u of the source and dual generators phi of the
  // target. Exact; throws CapabilityError for non-polyhedral endpoints.
  const Rational& norm() const;
  bool is_contraction() const { return norm() <= 1; }

 private:
  struct NormCache {
    std::once_flag once;
    Rational value;
  };
  ConeObject source_;
  ConeObject target_;
  MatQ matrix_;
  std::shared_ptr<NormCache> cache_;
};

// Matrix equality plus object equality of both endpoints.
bool morphisms_equal(const Morphism& f, const Morphism& g);

// Multiplicative connectives. The primal ball of a tensor is generated by
// elementary tensors of primal generators (Kronecker products); the dual
// side stays implicit above kMaxPolarDim and is then evaluated by the gauge
// LP. Coordinates of a (x) b are pairs (i, j) in row-major order.
ConeObject tensor_obj(const ConeObject& a, const ConeObject& b);
ConeObject cotensor_obj(const ConeObject& a, const ConeObject& b);  // dual(tensor(a^, b^))
ConeObject hom_obj(const ConeObject& a, const ConeObject& b);       // cotensor(a^, b)

// Additive connectives. Coordinates are (a-block, b-block).
ConeObject product_obj(const ConeObject& a, const ConeObject& b);
ConeObject coproduct_obj(const ConeObject& a, const ConeObject& b);  // dual(product(a^, b^))

// Sub-object on a subset of coordinates; the ball is the coordinate
// projection of the parent's ball.
ConeObject project_obj(const ConeObject& a, std::vector<std::size_t> coords, std::string label);

// Factors of a tensor object and of a hom object hom(b, c).
std::optional<std::pair<ConeObject, ConeObject>> tensor_factors(const ConeObject& o);
std::optional<std::pair<ConeObject, ConeObject>> hom_factors(const ConeObject& o);
std::optional<std::pair<ConeObject, ConeObject>> product_factors(const ConeObject& o);
std::optional<std::pair<ConeObject, ConeObject>> coproduct_factors(const ConeObject& o);

Morphism identity(const ConeObject& a);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism adjoint(const Morphism& f);                     // transpose, target^ -> source^
Morphism tensor_mor(const Morphism& f, const Morphism& g);
Morphism par_mor(const Morphism& f, const Morphism& g);

// Hom(A (x) B, C) <-> Hom(A, B -o C) by reshaping the matrix.
Morphism curry(const Morphism& f);
Morphism uncurry(const Morphism& g);

// Structural maps. All are coordinate permutations or block matrices.
Morphism assoc(const ConeObject& a, const ConeObject& b, const ConeObject& c);  // (a*b)*c -> a*(b*c)
Morphism assoc_inv(const ConeObject& a, const ConeObject& b, const ConeObject& c);
Morphism sym(const ConeObject& a, const ConeObject& b);  // a*b -> b*a
Morphism left_unitor(const ConeObject& a);               // 1*a -> a
Morphism left_unitor_inv(const ConeObject& a);
Morphism right_unitor(const ConeObject& a);  // a*1 -> a
Morphism right_unitor_inv(const ConeObject& a);
Morphism proj1(const ConeObject& a, const ConeObject& b);  // a&b -> a
Morphism proj2(const ConeObject& a, const ConeObject& b);  // a&b -> b
Morphism pair(const Morphism& f, const Morphism& g);       // c -> a&b
Morphism inj1(const ConeObject& a, const ConeObject& b);   // a -> a+b
Morphism inj2(const ConeObject& a, const ConeObject& b);   // b -> a+b
Morphism copair(const Morphism& f, const Morphism& g);     // a+b -> c
Morphism eval(const ConeObject& a, const ConeObject& b);   // (a -o b)*a -> b

// Lookup by catalog name: "assoc", "sym", "lunit", "runit", "proj1",
// "proj2", "inj1", "inj2", "eval". Arity depends on the name.
Morphism structural(const std::string& name, const std::vector<ConeObject>& args);

}  // namespace ccones

#endif  // CCONES_MALL_HPP
