#pragma once

// High-precision reference values (40+ digit arbitrary-precision evaluations).
namespace ref {

inline constexpr double kPi = 3.141592653589793;

inline constexpr double j50_at_10 = 2.2306960232186468577548e-31;
inline constexpr double b_three_halves_at_2 = 0.4989826685349715768268028;  // sqrt(2) J_2(2)
inline constexpr double c_10_three_halves = 0.002669652303059895833333333;
inline constexpr double B5_three_halves = 0.0002899169921875;
inline constexpr double B3_one_half = -0.0107421875;

inline constexpr double J2_zeros[] = {5.1356223018406825563, 8.4172441403998648578, 11.619841172149059427,
                                      14.795951782351260747, 17.959819494987826455, 21.116997053021845591,
                                      24.27011231357310261};

// q = x^2, l = 3/2, x = pi
inline constexpr double u0_l15 = 162.50124829798094084164473446;
inline constexpr double du0_l15 = 494.832018146213392687340744413;
inline constexpr double phi1_l15 = 174.829507170087833020047582603;
inline constexpr double beta_l15[] = {
    145.0078299703560779953819,  -251.5318533198221924930559,   141.4027591640102896530136,
    -40.51618995873739712258407, 6.217059690879645817213349,    -0.5862333041713279689510485,
    0.01537838699679717898901945, -0.004286617455577615533209555, -0.001995600017968506761580351};
inline constexpr double gamma_l15[] = {
    390.5102366957067456723043,  -673.0191429606303326355812,  372.2170870070102215368593,
    -103.8689990017642933246576, 15.7295137147066382282695,    -1.582378944061905569832071,
    0.04222115532084667977011494, -0.0143540645091466865634034, -0.006410850121694890097652379};

// q = x^2, l = 1, x = pi
inline constexpr double u0_l1 = 111.000598517431424328152182475;
inline constexpr double du0_l1 = 334.011889604417459019150802908;
inline constexpr double beta_l1[] = {
    101.1309941163420657093177,   -166.0717238040313037987688,    81.15920027432779637974588,
    -18.14208516596560372739033,  2.005879680861601979492935,     -0.07819477169021698935070677,
    -0.004574745339111830601847313, 0.000507062209167986212113072, -0.000001148372675657395781985757};
inline constexpr double gamma_l1[] = {
    276.725423499690963665102,     -451.633013276298554921778,    217.4714109484393851586467,
    -47.86250904463503618501811,   5.580111214904195358286056,    -0.2749962874101061488340722,
    -0.007947404962280019076526407, 0.001559517533753597147571699, -0.00003570164767928364761067577};

// Dirichlet eigenvalues, q = x^2, l = 3/2, b = pi; index -> omega
struct IndexedValue {
    int n;
    double omega;
};
inline constexpr IndexedValue square_eigenvalues[] = {
    {1, 2.46294997397397},  {2, 3.28835292994256},  {3, 4.14986421874478},  {5, 6.00758145811600},
    {7, 7.93973737689930},  {10, 10.8861250916173}, {20, 20.8202301908124}, {30, 30.7973502195868},
    {50, 50.7786768095149}, {100, 100.764442245651}};

}  // namespace ref
