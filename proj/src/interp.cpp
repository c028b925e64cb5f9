#include "psh/interp.hpp"

namespace psh {

Rational chi_twisted(const Ch& m, long n) { return euler(m) - m.r * Rational(n); }

std::string OrthoVerdict::str() const {
    switch (kind) {
        case Orthogonality::orthogonal: return "orthogonal";
        case Orthogonality::fails_h0: return "fails_h0(" + std::to_string(h0) + ")";
        case Orthogonality::chi_nonzero: return "chi_nonzero(" + to_str(chi) + ")";
        case Orthogonality::h2_uncertified: return "h2_uncertified";
    }
    return "?";
}

}  // namespace psh
