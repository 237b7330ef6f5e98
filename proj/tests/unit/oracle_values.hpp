#pragma once
// Generated by tests/oracle/gen_oracles.py; do not edit by hand.
#include <array>
#include <complex>

namespace oracle {

inline constexpr double log_gamma_quarter = 1.2880225246980774574;
inline const std::complex<double> log_gamma_c{-11.26488971344332239, 7.3005044150251248999};
inline const std::complex<double> log_gamma_neg{-1.6362270839097973452, -8.5899332984050309441};
inline const std::complex<double> digamma_c{1.0974491904411701782, 1.4868621062761755852};
inline constexpr double hurwitz_half_third = -0.11808332793422171909;
inline const std::complex<double> hurwitz_c{-0.40537147478582933186, 2.5395516022428008289};
inline const std::complex<double> zeta_crit{0.022241142609993589246, -0.1032581232664500579};
inline const std::complex<double> L_chi3_two{0.78130241289648629687, 0.0};
inline const std::complex<double> L_chi4_half_i{0.77008602447360498575, 0.26565908861137140387};
inline const std::complex<double> L_chi11_crit{2.0628430844117334962, 1.0068213552413366907};
inline const std::complex<double> completed_chi11{1.5647466984356043405, 0.52906147496690697223};
inline const std::complex<double> lambda_standin_chi11{0.01528290103042145191, 0.050830528866889729393};
inline const std::complex<double> lambda_pair_standin_chi11_t05{0.0028541980410905291785, 0.0};
inline const std::complex<double> G_mu0_half_t0{29857.167211414767912, 0.0};
inline const std::complex<double> G_mu1_half_t2{0.0050376870669677120539, 0.0};
inline const std::complex<double> G_mix_c{0.074275832524364927388, -0.03820159387650946708};
inline constexpr double G_int_mu0 = 13885.975998914121773;
inline constexpr double G_int_mu1 = 5.9206678554184206751;
inline constexpr double W_mu0_x1_t0 = 0.043329206041023536598;
inline constexpr double W_mu1_x03_t05 = 0.26192635184514943484;
inline constexpr double W_mix_x2_t3 = 0.000010205329831730035107;
inline const std::complex<double> V_mu1_1_2_3{0.023839129091303587556, -0.0000000000000000000000021780656237211259655};
inline constexpr double A_ones_s1_p1000 = 342.7329221970768136;
inline constexpr double Bp_ones_p5_half = 15.106201171875;
inline constexpr std::array<long long, 60> phi_flat_1_60{1, 0, 0, 0, 1, 0, 2, 1, 2, 0, 4, 1, 5, 0, 2, 2, 7, 0, 8, 2, 3, 0, 10, 1, 8, 0, 6, 3, 13, 0, 14, 4, 5, 0, 8, 2, 17, 0, 6, 3, 19, 0, 20, 5, 6, 0, 22, 2, 18, 0, 8, 6, 25, 0, 14, 5, 9, 0, 28, 1};
struct OrthCase { unsigned long long q; long long m, n; long long num, den; double lhs; };
inline constexpr std::array<OrthCase, 7> orth_cases{{{5, 1, 1, 1, 1, 1.0}, {7, 2, 1, -1, 1, -1.0}, {12, 5, 1, -1, 1, -1.0}, {13, 2, 5, -1, 1, -1.0}, {40, 3, 7, 1, 1, 1.0}, {63, 4, 13, -2, 1, -2.0}, {101, 3, 98, 49, 1, 49.0}}};
inline constexpr double large_sieve_Q6_M1 = 0.16666666666666666667;

}  // namespace oracle
