#pragma once
// Generated by tools/gen_aux_series.py -- do not edit by hand.
// Polynomials in t = xi^4; Horner-ready, highest degree last.

namespace chaoskernel::aux_series {

inline constexpr int kTerms = 10;

inline constexpr double k_u_r[kTerms] = {
    1.20000000000000000e+01,  // 12
    5.71428571428571428e-03,  // 1/175
    -3.05091733663162239e-06,  // -37/12127500
    1.84782044192475026e-09,  // 2753/1489863375000
    -1.13164169581906425e-12,  // -8386459/7410878399925000000
    6.93870892019279612e-16,  // 14529522883/20939807462908083750000000
    -4.25507416014463387e-19,  // -47497385017/111625281321502323375000000000
    2.60940984693513323e-22,  // 2025465606865817/7762159743686166037037568750000000000
    -1.60021459164973892e-25,  // -765408870503963716543/4783163923751417016212727649822500000000000000
    9.81328118771836303e-29,  // 39575736451314862639/403287500829438861760014522006375000000000000000
};

inline constexpr double k_u_i[kTerms] = {
    1.19999999999999996e+00,  // 6/5
    -6.34920634920634893e-05,  // -1/15750
    3.74228945657517115e-08,  // 59/1576575000
    -2.28564187481087563e-11,  // -827/36182396250000
    1.40102984984302662e-14,  // 28033727/2000937167979750000000
    -8.59134254308065385e-18,  // -163546417/19036188602643712500000000
    5.26859124372024237e-21,  // 170551314127/32371331583235673778750000000000
    -3.23095003136777140e-24,  // -264083452315137289/81735542101015328370005598937500000000000
    1.98137298015800833e-27,  // 206269161795848156197/104104155987530840941100542966725000000000000000
    -1.21507269269634711e-30,  // -43851182980953334326343/36089349422908948078142099543777853750000000000000000
};

inline constexpr double k_v_r[kTerms] = {
    1.00000000000000000e+00,  // 1
    5.55555555555555577e-03,  // 1/180
    -1.32275132275132281e-05,  // -1/75600
    3.38188168875999566e-08,  // 691/20432412000
    -8.67758155858581176e-11,  // -3617/41682120480000
    2.22706554732345541e-13,  // 174611/784040686228800000
    -5.71574873530880914e-16,  // -236364091/413531283381773356800000
    1.46694429524583158e-18,  // 3392780147/2312821392056632416960000000
    -3.76490601275208661e-21,  // -7709321041217/2047679547671260076679705600000000
    9.66261457725767100e-24,  // 26315271553053477373/2723411074988977499208106463991552000000000
};

inline constexpr double k_v_i[kTerms] = {
    8.33333333333333287e-02,  // 1/12
    -1.32275132275132284e-04,  // -1/7560
    3.34028111805889603e-07,  // 1/2993760
    -8.56482337963819447e-10,  // -1/1167566400
    2.19803188640712836e-12,  // 43867/19957399285824000
    -5.64121889624087504e-15,  // -77683/13770605507218560000
    1.44781600343222980e-17,  // 657931/45442998173821248000000
    -3.71581329791005971e-20,  // -1723168255201/46373919167849125265981568000000
    9.53661833618957899e-23,  // 151628697551/1589962942897684294833653760000000
    -2.44756886509192349e-25,  // -154210205991661/630054615382065355513731975475200000000
};

inline constexpr double k_f_r_reg[kTerms] = {
    6.00000000000000000e+00,  // 6
    -6.38095238095238160e-02,  // -67/1050
    2.31278774135916981e-04,  // 16829/72765000
    -6.48420866107940899e-07,  // -58549/90294750000
    1.70097064570567507e-09,  // 75634119703/44465270399550000000
    -4.38871168811903195e-12,  // -551392666556561/125638844777448502500000000
    1.12779293675022021e-14,  // 32731452997658119/2902257314359060407750000000000
    -2.89535553025303899e-17,  // -122586611675941380349/4233905314737908747475037500000000000
    7.43145704724559326e-20,  // 125456037350447122115633443/1688175502500500123369197994055000000000000000
    -1.90731326970895556e-22,  // -637970832165888781126078690637/3344866531879365919437560445520874250000000000000000
};

inline constexpr double k_f_i_reg[kTerms] = {
    8.00000000000000044e-01,  // 4/5
    -4.06349206349206332e-03,  // -32/7875
    1.24273609987895702e-05,  // 29389/2364862500
    -3.33340053583706576e-08,  // -6332047/189957580312500
    8.64788948634049223e-11,  // 86519417489/1000468583989875000000
    -2.22524495666797642e-13,  // -1588506850583/7138570725991392187500000
    5.71463228085633604e-16,  // 51533000008247503/90177280839013662669375000000000
    -1.46687582904962698e-18,  // -3330441418951320710011/2270431725028203565833488859375000000000
    3.76486402601431553e-21,  // 9994418791818959787216405229/2654655977682036443998063845651487500000000000000
    -9.66258882898200870e-24,  // -73076628827222843293291574437/7562841607006654560493013507335800234375000000000000
};

}  // namespace chaoskernel::aux_series
