#include "csalg/involution.hpp"

namespace csalg {

std::string involution_kind_name(InvolutionKind k) {
    return k == InvolutionKind::first ? "first" : "second";
}

std::string involution_type_name(InvolutionType t) {
    switch (t) {
        case InvolutionType::orthogonal: return "orthogonal";
        case InvolutionType::symplectic: return "symplectic";
        case InvolutionType::unitary: return "unitary";
    }
    return "?";
}

} // namespace csalg
