#pragma once

#include "socoulomb/element.hpp"

#include <string>
#include <vector>

namespace socoulomb::catalog {

// --- dimension-generic blocks -------------------------------------------------
Element dilation(int dim);              // D = sum x_i p_i
Element j3_sl2(int dim);                // D - i hbar dim/2
Element lhat(int dim);                  // n=2: L0 ; n=3: sigma.L + hbar/2
Element ell(int dim, int shift = 0);    // lhat + hbar gamma + shift * hbar
// sqrt(2)-rescaled radial ladders A~ = sqrt2 A, so every coefficient stays
// Gaussian-rational; shift moves ell -> ell + shift*hbar in the formula.
Element a_tilde(int dim, int shift = 0);
Element a_tilde_dag(int dim, int shift = 0);
Element ladder_minus(int dim, int k);   // L^-_k
Element ladder_plus(int dim, int k);    // L^+_k
// (r^-2 (J3+i hbar)^2 + ell^2 r^-2)/2 - alpha/r with ell shifted by `shift` hbar
Element alg_hamiltonian(int dim, int shift = 0);

// --- three dimensions ---------------------------------------------------------
Element ang(int i);                     // L_i
Element l_sq();                         // L^2
Element sigma_dot_l();                  // sigma . L
Element jtotal(int i);                  // J_i = L_i + hbar sigma_i / 2
Element jtotal_sq();
Element h3();                           // the spin-orbit Coulomb Hamiltonian
Element x_op(int j);                    // X_j = (L+_j A~ + A~+ L-_j)/2
Element y_op(int j);                    // Y_j = -i/2 (L+_j A~ - A~+ L-_j)
Element v3();                           // scalar+spin-orbit potential in the Runge form
Element runge(int j);                   // gauge-covariant Runge-Lenz vector component
Element x_runge(int j);                 // (SL runge + runge SL)/2 + 3 hbar/2 runge
Element x_explicit(int j);              // the sigma-linear closed form
Element f_poly();                       // F(H, L.sigma)
Element g_printed();                    // G(H, L.sigma, J^2)

// --- two dimensions -----------------------------------------------------------
Element h2_flat();                      // (p1^2+p2^2)/2 - alpha/r
Element h2_gauged();                    // + gauge terms in hbar gamma
Element eplus();                        // e^{+i phi} = (x1 + i x2)/r
Element eminus();
Element x_2d();                         // (e^{+} A~ + A~+ e^{-})/2
Element y_2d();
Element r1_2d(bool alt = false);        // Runge-Lenz by gauge conjugation;
Element r2_2d(bool alt = false);        // alt reads the ell factor squared
Element r_flat(int j);                  // the flat (gamma = 0) classics
Element gauge_conj(const Element& e, int k);  // e^{-ik phi} . e . e^{+ik phi}

// --- one-dimensional radial lab ----------------------------------------------
Element dr();                           // hbar d_r = i x1 p1 / r
Element h1m();                          // radial Hamiltonian at angular label m
Element a1m();                          // cleared-denominator radial ladder
Element a1m_dag();

// --- string-keyed access ------------------------------------------------------
const std::vector<std::string>& keys();
Element get(const std::string& key);
std::string dump();  // one "KEY\t<element>" line per key, deterministic

}  // namespace socoulomb::catalog
