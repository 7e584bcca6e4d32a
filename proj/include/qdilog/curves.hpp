#pragma once

#include "qdilog/quiver.hpp"
#include "qdilog/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qdl {

// sign * L_[lo,hi] on the chain L_1..L_n
struct CurveClass {
    int sign = 1;
    Interval iv{1, 1};

    auto operator<=>(const CurveClass&) const = default;
    CurveClass negated() const { return {-sign, iv}; }
    CurveClass positive() const { return {1, iv}; }
    std::string str() const;
};

inline CurveClass L(int lo, int hi, int sign = 1) { return {sign, {lo, hi}}; }

CurveClass parse_curve(const std::string& s);

using HomologyVec = std::vector<int>;

struct UnsupportedTwistCase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class TwistCase {
    Identical,
    Disjoint,
    LeftAddition,      // tau_{L_a}(L_[a+1,d]) = L_[a,d]
    RightAddition,     // tau_{L_[a,b]}(L_{b+1}) = L_[a,b+1]
    RightSubtraction,  // tau_{L_[j,k]}(L_[a,k]) = L_[a,j-1], a < j-1
    RightOverspill,    // tau_{L_[a,k]}(L_[a,j]) = -L_[j+1,k], j < k
    LeftOverspill,     // tau_{L_[a+1,k]}(L_[a,k]) = L_a
};

std::string twist_case_str(TwistCase c);

// Throws UnsupportedTwistCase. Orientation of the twister is irrelevant.
TwistCase classify_twist(const CurveClass& twister, const CurveClass& target);
CurveClass dehn_twist(const CurveClass& twister, const CurveClass& target);
// Unique y on the chain of length n with dehn_twist(twister, y) == target.
CurveClass inverse_dehn_twist(const CurveClass& twister, const CurveClass& target, int n);

// <e_i, e_{i+1}> for the chain; fixed by the consistency scan in the tests.
constexpr int kChainPairingSign = -1;

HomologyVec homology_class(const CurveClass& c, int n);
int chain_pairing(const HomologyVec& x, const HomologyVec& y, int sign = kChainPairingSign);
HomologyVec homology_twist(const HomologyVec& twister, const HomologyVec& target,
                           int sign = kChainPairingSign);
HomologyVec homology_inverse_twist(const HomologyVec& twister, const HomologyVec& target,
                                   int sign = kChainPairingSign);

std::vector<CurveClass> all_curves(int n);

Report check_twist_consistency(int n, int sign = kChainPairingSign);

// The five chain identities at every offset for chains of length <= n, each
// checked against the rewrite rules and the homology oracle, plus the
// twist/inverse-twist round trip on every right-subtraction instance.
Report verify_twist_identities(int n);

}  // namespace qdl
