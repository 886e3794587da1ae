#include "qerase/sampling.hpp"

#include "qerase/erasure.hpp"
#include "qerase/errors.hpp"

#include <cmath>
#include <numbers>

namespace qerase {

DynamicsSample sample_dynamics_point(Rng& rng) {
    std::uniform_int_distribution<int> fock(0, 5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    DynamicsSample s;
    s.n1 = fock(rng);
    s.n2 = fock(rng);
    s.params.g = 0.1 + 0.9 * unit(rng);
    s.params.set_detuning(-2.0 + 4.0 * unit(rng));
    s.params.gamma = unit(rng);
    s.t = 20.0 * unit(rng);
    return s;
}

FieldState sample_field_state(Rng& rng, std::size_t max_dimension) {
    if (max_dimension < 4) throw InvalidArgument("sample_field_state: need room for at least 2x2 levels");
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const int max_levels = static_cast<int>(max_dimension / 2);
    std::uniform_int_distribution<int> pick1(2, std::max(2, std::min(max_levels, 8)));
    const int levels1 = pick1(rng);
    std::uniform_int_distribution<int> pick2(2, std::max(2, static_cast<int>(max_dimension) / levels1));
    const int levels2 = pick2(rng);

    FieldStateBuilder builder(levels1, levels2);
    for (int n1 = 0; n1 + 1 < levels1; ++n1) {
        for (int n2 = 0; n2 + 1 < levels2; ++n2) {
            if (unit(rng) < 0.2) continue;
            FieldBlock b;
            b.n1 = n1;
            b.n2 = n2;
            b.w_low = unit(rng);
            b.w_high = unit(rng);
            const double saturation = unit(rng) < 0.5 ? 1.0 : unit(rng);
            b.c = std::polar(saturation * std::sqrt(b.w_low * b.w_high), 2.0 * std::numbers::pi * unit(rng));
            builder.add(b, unit(rng));
        }
    }
    for (int k = 0; k < 3; ++k) {
        std::uniform_int_distribution<int> r1(0, levels1 - 1);
        std::uniform_int_distribution<int> r2(0, levels2 - 1);
        const int m1 = r1(rng);
        const int m2 = r2(rng);
        builder.add_population(m1, m2, 0.05 * unit(rng));
    }
    return builder.build_normalized();
}

} // namespace qerase
