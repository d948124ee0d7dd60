#include "csalg/cones.hpp"

namespace csalg {

ConeAxiomReport sample_cone_axioms(Kind kind, int n, int samples, uint64_t seed,
                                   ConeFault fault) {
    switch (kind) {
        case Kind::real:
            return sample_cone_axioms_typed<Rational>(n, samples, seed, fault);
        case Kind::complex:
            return sample_cone_axioms_typed<GaussRational>(n, samples, seed, fault);
        case Kind::quaternion:
            return sample_cone_axioms_typed<RatQuaternion>(n, samples, seed, fault);
    }
    throw InvalidArgumentError("unknown kind");
}

} // namespace csalg
