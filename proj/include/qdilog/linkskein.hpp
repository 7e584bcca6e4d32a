#pragma once

#include "qdilog/ratfunc.hpp"
#include "qdilog/report.hpp"
#include "qdilog/torus.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdl {

// Coordinates in the basis L_1..L_n, M_1..M_n of H_1 of the genus-n surface.
using SurfaceClass = std::vector<int>;

struct MissingUnknotTerm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroClass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PairingConfig {
    int n = 0;
    std::vector<std::vector<int>> m;  // 2n x 2n, antisymmetric

    static PairingConfig chain(int n);  // only L_i ^ L_{i+1} set
    int operator()(const SurfaceClass& x, const SurfaceClass& y) const;
    // Empty when antisymmetric and the chain entries match the curves module.
    std::string validate() const;
};

struct SkeinTerm {
    int a_power = 0;
    SurfaceClass cls;
    RatFunc coeff{1};
};

SkeinTerm surface_mul(const SkeinTerm& x, const SkeinTerm& y, const PairingConfig& cfg);

struct FaceTermSpec {
    bool unknot = false;
    int gamma = 0;  // (-a)^gamma [cls]; ignored for the unknot term
    SurfaceClass cls;
};

struct FaceOperator {
    std::vector<SkeinTerm> terms;
    size_t unknot_index = 0;
};

FaceOperator face_operator(const std::vector<FaceTermSpec>& spec, int n);

// after * E_q(x_E) == E_q(x_E) * before, graded by the multiple of E.
Report verify_conjugation(const FaceOperator& before, const FaceOperator& after, const SurfaceClass& e, int D,
                          const PairingConfig& cfg, DilogCoefficient kind = DilogCoefficient::Keller);

struct LinkskeinConfig {
    PairingConfig pairing;
    std::vector<FaceTermSpec> before;
    std::vector<FaceTermSpec> after;
    SurfaceClass e;
    int D = 4;
    std::map<std::string, SurfaceClass> labels;
    std::map<std::string, std::vector<std::string>> faces;
};

LinkskeinConfig load_linkskein_config(const json& j);

// Every face's label classes sum to zero in H_1.
Report check_face_sums(const LinkskeinConfig& cfg);
SurfaceClass parse_surface_class(const std::string& s, int n);

}  // namespace qdl
