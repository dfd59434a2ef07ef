#include "fermisea/trap.hpp"

#include <stdexcept>

#include "fermisea/errors.hpp"

namespace fermisea {

namespace {

using int128 = __int128;

constexpr int kEnumerationGuard = 10000;

void require_shell(int n) {
  if (n < 0) throw std::invalid_argument("shell index must be >= 0");
}

void require_state(const OscillatorState& s) {
  if (s.nx < 0 || s.ny < 0 || s.nz < 0) {
    throw std::invalid_argument("oscillator quantum numbers must be >= 0");
  }
}

}  // namespace

std::string to_string(Shape shape) {
  return shape == Shape::Pancake ? "pancake" : "cigar";
}

Shape shape_from_string(const std::string& name) {
  if (name == "pancake") return Shape::Pancake;
  if (name == "cigar") return Shape::Cigar;
  throw std::invalid_argument("unknown trap shape: " + name);
}

TrapGeometry::TrapGeometry(Shape trap_shape, int lambda)
    : shape(trap_shape), aspect_ratio(lambda) {
  if (lambda < 1) throw std::invalid_argument("TrapGeometry: aspect ratio must be >= 1");
}

FermiSea::FermiSea(int fermi_shell) : shell(fermi_shell) {
  if (shell < -1) throw std::invalid_argument("FermiSea: shell must be >= -1");
}

int floored_tilde(int n, int lambda) {
  require_shell(n);
  if (lambda < 1) throw std::invalid_argument("floored_tilde: lambda must be >= 1");
  return n / lambda;
}

int shell_index(const TrapGeometry& geom, const OscillatorState& state) {
  require_state(state);
  if (geom.shape == Shape::Pancake) {
    return state.nx + state.ny + geom.aspect_ratio * state.nz;
  }
  return geom.aspect_ratio * (state.nx + state.ny) + state.nz;
}

double shell_energy(const TrapGeometry& geom, int n) {
  require_shell(n);
  if (geom.shape == Shape::Pancake) {
    return n + geom.aspect_ratio / 2.0 + 1.0;
  }
  return n + geom.aspect_ratio + 0.5;
}

long long degeneracy(const TrapGeometry& geom, int n) {
  require_shell(n);
  const long long lambda = geom.aspect_ratio;
  const long long nt = floored_tilde(n, geom.aspect_ratio);
  if (geom.shape == Shape::Pancake) {
    const long long product = (nt + 1) * (2 * n - lambda * nt + 2);
    if (product % 2 != 0) throw guard_error("pancake degeneracy form is not integral");
    return product / 2;
  }
  return (nt + 1) * (nt + 2) / 2;
}

long long degeneracy_bruteforce(const TrapGeometry& geom, int n) {
  require_shell(n);
  if (n > kEnumerationGuard) {
    throw guard_error("degeneracy_bruteforce: shell index exceeds enumeration guard");
  }
  const int lambda = geom.aspect_ratio;
  long long count = 0;
  if (geom.shape == Shape::Pancake) {
    for (int nz = 0; lambda * nz <= n; ++nz) {
      for (int nx = 0; nx + lambda * nz <= n; ++nx) {
        const OscillatorState s{nx, n - lambda * nz - nx, nz};
        if (shell_index(geom, s) == n) ++count;
      }
    }
  } else {
    for (int nx = 0; lambda * nx <= n; ++nx) {
      for (int ny = 0; lambda * (nx + ny) <= n; ++ny) {
        const OscillatorState s{nx, ny, n - lambda * (nx + ny)};
        if (shell_index(geom, s) == n) ++count;
      }
    }
  }
  return count;
}

long long cumulative_states(const TrapGeometry& geom, int fermi_shell) {
  if (fermi_shell < -1) throw std::invalid_argument("cumulative_states: fermi_shell must be >= -1");
  if (fermi_shell == -1) return 0;

  const int128 n = fermi_shell;
  const int128 lambda = geom.aspect_ratio;
  const int128 nt = floored_tilde(fermi_shell, geom.aspect_ratio);

  if (geom.shape == Shape::Pancake) {
    // S = (1/6)(nt+1)(2n - lambda nt + 2)
    //     * [ (3/2)n - (3/4)lambda nt + lambda^2 nt (2+nt) / (8+8n-4 lambda nt) + 3 ]
    // folded over the common denominator 4 * (8+8n-4 lambda nt).
    const int128 a = nt + 1;
    const int128 b = 2 * n - lambda * nt + 2;
    const int128 e = 8 + 8 * n - 4 * lambda * nt;
    const int128 d = lambda * lambda * nt * (2 + nt);
    const int128 num = a * b * ((6 * n - 3 * lambda * nt + 12) * e + 4 * d);
    const int128 den = 24 * e;
    if (num % den != 0) {
      throw guard_error("pancake cumulative count closed form is not integral");
    }
    return static_cast<long long>(num / den);
  }

  const int128 num = (nt + 1) * (nt + 2) * (3 * n - 2 * nt * lambda + 3);
  if (num % 6 != 0) {
    throw guard_error("cigar cumulative count closed form is not integral");
  }
  return static_cast<long long>(num / 6);
}

ShellFill fermi_shell_for_atoms(const TrapGeometry& geom, long long atoms) {
  if (atoms < 0) throw std::invalid_argument("fermi_shell_for_atoms: atoms must be >= 0");
  if (atoms == 0) return {-1, 0};
  long long filled = 0;
  for (int n = 0;; ++n) {
    const long long g = degeneracy(geom, n);
    if (filled + g >= atoms) return {n, atoms - filled};
    filled += g;
  }
}

}  // namespace fermisea
