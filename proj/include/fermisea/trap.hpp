#pragma once

#include <string>

namespace fermisea {

// Axially symmetric harmonic trap with two equal frequencies. Pancake traps
// are tight along z (frequencies omega * {1, 1, lambda}); cigar traps are
// tight in the xy plane (omega * {lambda, lambda, 1}).
enum class Shape { Pancake, Cigar };

std::string to_string(Shape shape);
Shape shape_from_string(const std::string& name);

struct TrapGeometry {
  Shape shape;
  int aspect_ratio;  // integer lambda >= 1; lambda = 1 is the isotropic trap

  TrapGeometry(Shape trap_shape, int lambda);
};

// Highest fully occupied shell of the spin-polarised sea. shell = -1 encodes
// the empty trap.
struct FermiSea {
  int shell;

  explicit FermiSea(int fermi_shell);
};

struct OscillatorState {
  int nx = 0;
  int ny = 0;
  int nz = 0;
};

/// floor(n / lambda) - the tilde convention used throughout.
int floored_tilde(int n, int lambda);

// Shell quantum number of a state: n_x + n_y + lambda n_z for pancake traps,
// lambda (n_x + n_y) + n_z for cigar traps.
int shell_index(const TrapGeometry& geom, const OscillatorState& state);

/// Shell energy in units of hbar omega, ground-state offset included.
double shell_energy(const TrapGeometry& geom, int n);

/// Number of oscillator states in shell n, by the closed form.
long long degeneracy(const TrapGeometry& geom, int n);

/// Same count by direct enumeration of states; oracle for degeneracy().
/// Guarded to n <= 10^4.
long long degeneracy_bruteforce(const TrapGeometry& geom, int n);

// Total number of states in shells 0..fermi_shell, by the closed forms. The
// pancake form carries a fractional inner term; it is evaluated in exact
// rational arithmetic and the result is checked to be integral.
long long cumulative_states(const TrapGeometry& geom, int fermi_shell);

struct ShellFill {
  int shell = -1;          // smallest n_F whose cumulative count reaches the atom number
  long long occupancy = 0;  // how many states of that top shell are filled
};

/// Inverse of cumulative_states: the Fermi shell reached by N atoms filling
/// states from the bottom. N = 0 gives the empty trap {-1, 0}.
ShellFill fermi_shell_for_atoms(const TrapGeometry& geom, long long atoms);

}  // namespace fermisea
