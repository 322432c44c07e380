#ifndef ZS_POTENTIAL_HPP
#define ZS_POTENTIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zs/types.hpp"

namespace zs {

enum class Symmetry { generic, defocusing, focusing, zero, constant };

std::string to_string(Symmetry s);

// Two-component potential on the unit circle, stored as Fourier
// coefficients c_k of exp(2*pi*i*k*x). Immutable after construction.
class Potential {
  public:
    using CoeffMap = std::map<int, cplx>;

    Potential();  // zero potential
    Potential(CoeffMap phi1, CoeffMap phi2,
              Symmetry tag = Symmetry::generic);

    static Potential zero();
    static Potential constant(cplx a, cplx b);
    static Potential from_json_file(const std::string& path);
    static Potential from_json_text(const std::string& text);
    // Uniform samples over one period; converted by a discrete transform.
    static Potential from_samples(const std::vector<cplx>& phi1,
                                  const std::vector<cplx>& phi2);

    const CoeffMap& phi1() const { return c1_; }
    const CoeffMap& phi2() const { return c2_; }
    Symmetry symmetry() const { return tag_; }
    int truncation_radius() const { return radius_; }
    bool is_zero() const { return c1_.empty() && c2_.empty(); }
    bool is_constant() const;

    // Pointwise values phi1(x), phi2(x) for real x; one complex
    // exponential per call, modes reached by repeated multiplication.
    void eval(double x, cplx& p1, cplx& p2) const;

    // l2 norm of the coefficient pair.
    double norm() const;
    Potential scaled_to_norm(double target) const;

    // Stable content hash (used to key quadrature caches).
    std::uint64_t hash() const;
    std::string to_json_text() const;

  private:
    void finalize();
    void check_symmetry_tag() const;

    CoeffMap c1_, c2_;
    Symmetry tag_ = Symmetry::generic;
    int radius_ = 0;
    // dense tables c[k + radius_] for the evaluator
    std::vector<cplx> dense1_, dense2_;
};

}  // namespace zs

#endif
