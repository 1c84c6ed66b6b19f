#pragma once

// Reference values from mpmath (40 digits); regenerate with generate.py.

#include <array>

#include "ferrox/complexmath.hpp"

namespace oracle {

using ferrox::cplx;

struct Row4 { cplx a, b, c, value; };
struct Row2 { cplx z, value; };

inline const std::array<Row2, 8> kGamma{{
    {{0.5, 0.0}, {1.7724538509055160273, 0.0}},
    {{3.7000000000000001776, 0.0}, {4.1706517837966040301, 0.0}},
    {{-2.5, 0.0}, {-0.94530872048294188123, 0.0}},
    {{0.2999999999999999889, 4.0}, {1.164643684811490564e-3, 3.3525598880352024374e-3}},
    {{-7.2000000000000001776, 1.1000000000000000888}, {-2.833150799395656084e-5, -1.4107696962971396092e-6}},
    {{12.5, -30.0}, {5.1671343150484892346e-3, -3.4023841882272488202e-3}},
    {{1.0000000000000000208e-3, 0.0}, {999.4237724845954453, 0.0}},
    {{-0.5, -0.5}, {-1.5814778282557300107, 0.054850170827764777407}},
}};
inline const std::array<Row2, 8> kLogGamma{{
    {{0.5, 0.0}, {0.57236494292470008707, 0.0}},
    {{3.7000000000000001776, 0.0}, {1.4280723266653881292, 0.0}},
    {{-2.5, 0.0}, {-0.056243716497674050673, -9.4247779607693797154}},
    {{0.2999999999999999889, 4.0}, {-5.6410635348205287296, 1.236449121549806625}},
    {{-7.2000000000000001776, 1.1000000000000000888}, {-10.470297775488851509, -21.9413945908501362}},
    {{12.5, -30.0}, {-5.0853503393553046935, -88.54689827081931339}},
    {{1.0000000000000000208e-3, 0.0}, {6.9071788853838536617, 0.0}},
    {{-0.5, -0.5}, {0.45896083308959576723, 3.1069236923143956735}},
}};

// 2F1(a, b; c; w), principal branch.
inline const std::array<Row4, 12> kHyp2f1{{
    {{0.2999999999999999889, 0.0}, {0.69999999999999995559, 0.0}, {1.1999999999999999556, 0.0}, {1.1208772864192593803, 0.0}},
    {{0.2999999999999999889, 0.0}, {0.69999999999999995559, 0.0}, {1.1999999999999999556, 0.0}, {0.88833417652462685982, 0.0}},
    {{1.5, 0.0}, {-0.5, 0.0}, {2.5, 0.0}, {0.91843604013962296439, -0.26452751883630675579}},
    {{0.2000000000000000111, 0.2999999999999999889}, {1.1000000000000000888, 0.0}, {0.5999999999999999778, 0.0}, {0.48259260729224995997, -0.36414948876153527341}},
    {{2.2000000000000001776, 0.0}, {1.3000000000000000444, 0.0}, {4.0999999999999996447, 0.0}, {0.82157392954049003766, 0.73685313040768584139}},
    {{0.25, 0.0}, {0.75, 0.0}, {1.5, 0.0}, {0.65228710239078527555, -0.42520559527472153884}},
    {{-3.0, 0.0}, {2.5, 0.0}, {1.5, 0.0}, {-720.0, 0.0}},
    {{1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {0.69334039591417718886, 0.0}},
    {{0.5, 0.0}, {0.5, 0.0}, {1.0, 0.0}, {1.1922023586706979159, 0.36980482230871261758}},
    {{6.0999999999999996447, 0.0}, {0.4000000000000000222, 0.0}, {3.2999999999999998224, 0.0}, {-2.2438793990310676099, -1.3275268247792360534}},
    {{0.69999999999999995559, 0.0}, {1.8999999999999999112, 0.0}, {1.1000000000000000888, 0.0}, {-41.503477904378307219, 44.064072185967693892}},
    {{1.3000000000000000444, 0.0}, {0.2000000000000000111, 0.0}, {0.9000000000000000222, 0.0}, {0.41849800382159656602, 1.0548782274167247634e-3}},
}};
inline const std::array<cplx, 12> kHyp2f1Args{{
    {0.5, 0.0},
    {-0.9000000000000000222, 0.0},
    {0.4000000000000000222, 0.80000000000000004441},
    {-3.0, 1.0},
    {0.5, 0.86599999999999999201},
    {10.0, -2.0},
    {7.0, 0.0},
    {-0.99899999999999999911, 0.0},
    {0.9000000000000000222, 0.42999999999999999334},
    {0.96999999999999997335, 0.2000000000000000111},
    {1.0, 0.050000000000000002776},
    {-40.0, 0.5},
}};

// Boundary values 2F1(a, b; c; x + i0) and 2F1(a, b; c; x - i0) for x > 1.
struct CutRow { cplx a, b, c; double x; cplx above, below; };
inline const std::array<CutRow, 4> kCut{{
    {{0.2999999999999999889, 0.0}, {0.69999999999999995559, 0.0}, {1.1999999999999999556, 0.0}, 2.0, {0.99863991755864498671, 0.61943241073428434237}, {0.99863991755864498671, -0.61943241073428434237}},
    {{0.2000000000000000111, 0.10000000000000000555}, {1.3999999999999999112, 0.0}, {2.2999999999999998224, 0.0}, 1.5, {1.0133192951892945332, 0.4545576304143818594}, {1.4955605847222693722, -0.28558125682149610765}},
    {{-0.5999999999999999778, 0.0}, {0.4500000000000000111, 0.0}, {0.80000000000000004441, 0.0}, 5.0, {-0.19716615868818795631, -1.2215625765337361973}, {-0.19716615868818795631, 1.2215625765337361973}},
    {{1.25, 0.0}, {0.5, 0.0}, {3.1000000000000000888, 0.0}, 1.1, {1.5829558497968347008, 0.13129953654571581216}, {1.5829558497968347008, -0.13129953654571581216}},
}};

struct LegendreRow { cplx nu, mu, x, value; };
inline const std::array<LegendreRow, 10> kFerrersQ{{
    {{0.2999999999999999889, 0.0}, {0.4000000000000000222, 0.0}, {0.2000000000000000111, 0.0}, {-1.0212192992642672916, 0.0}},
    {{0.2999999999999999889, 0.0}, {0.4000000000000000222, 0.0}, {0.98999999999999999112, 0.0}, {0.4363496678655655644, 0.0}},
    {{1.6999999999999999556, 0.0}, {0.25, 0.0}, {-0.5, 0.0}, {0.97395577527509278546, 0.0}},
    {{-0.4000000000000000222, 0.2000000000000000111}, {0.10000000000000000555, 0.10000000000000000555}, {0.2999999999999999889, 0.0}, {0.81739769145616293998, -0.96260245379090660937}},
    {{0.2999999999999999889, 0.0}, {-0.5999999999999999778, 0.0}, {0.2999999999999999889, 0.4000000000000000222}, {1.057897760528982956, 0.45528265649986930413}},
    {{2.5, 0.0}, {1.5, 0.0}, {-0.2999999999999999889, -0.5999999999999999778}, {-5.1489922886679500949, -6.4883430042897993164}},
    {{0.5999999999999999778, 0.0}, {0.2999999999999999889, 0.0}, {1.5, 0.2000000000000000111}, {-0.74366881472067383478, 1.5097482584456942519}},
    {{0.10000000000000000555, 0.0}, {-0.3499999999999999778, 0.0}, {-2.0, -0.69999999999999995559}, {0.11866556966779090621, -1.5178650001467114426}},
    {{4.2000000000000001776, 0.0}, {0.69999999999999995559, 0.0}, {-0.94999999999999995559, 0.0}, {-2.5397503354776664252, 0.0}},
    {{0.2999999999999999889, 0.0}, {0.4000000000000000222, 0.0}, {0.10000000000000000555, 3.0}, {-1.5071618358529712021, 0.71269910911092199067}},
}};
inline const std::array<LegendreRow, 10> kFerrersP{{
    {{0.2999999999999999889, 0.0}, {0.4000000000000000222, 0.0}, {0.2000000000000000111, 0.0}, {0.48441354449945907574, 0.0}},
    {{0.2999999999999999889, 0.0}, {0.4000000000000000222, 0.0}, {0.98999999999999999112, 0.0}, {1.9293122303315778445, 0.0}},
    {{1.6999999999999999556, 0.0}, {0.25, 0.0}, {-0.5, 0.0}, {-0.31911307454002125438, 0.0}},
    {{-0.4000000000000000222, 0.2000000000000000111}, {0.10000000000000000555, 0.10000000000000000555}, {0.2999999999999999889, 0.0}, {1.1099319561859115441, -0.051810411031010402806}},
    {{0.2999999999999999889, 0.0}, {-0.5999999999999999778, 0.0}, {0.2999999999999999889, 0.4000000000000000222}, {0.85808110408708458252, -0.15313511394970388879}},
    {{2.5, 0.0}, {1.5, 0.0}, {-0.2999999999999999889, -0.5999999999999999778}, {4.4517184780028968055, -2.9539831468173710039}},
    {{0.5999999999999999778, 0.0}, {0.2999999999999999889, 0.0}, {1.5, 0.2000000000000000111}, {1.1207160613038728529, 0.63658502349587447208}},
    {{0.10000000000000000555, 0.0}, {-0.3499999999999999778, 0.0}, {-2.0, -0.69999999999999995559}, {1.1757069885958730731, 0.34095311955141081141}},
    {{4.2000000000000001776, 0.0}, {0.69999999999999995559, 0.0}, {-0.94999999999999995559, 0.0}, {1.1491493773409234303, 0.0}},
    {{0.2999999999999999889, 0.0}, {0.4000000000000000222, 0.0}, {0.10000000000000000555, 3.0}, {0.50378421686900881764, 0.87031988147108505814}},
}};
inline const std::array<LegendreRow, 7> kLegendreQ{{
    {{0.5, 0.0}, {0.25, 0.0}, {1.0, 2.0}, {0.09525197266386083747, -0.1315739167147555121}},
    {{0.2999999999999999889, 0.0}, {0.4000000000000000222, 0.0}, {2.0, 0.0}, {0.099731049611207332942, 0.30694060953362133793}},
    {{1.6999999999999999556, 0.0}, {-0.5999999999999999778, 0.0}, {-1.5, 0.5}, {-0.043781152858580784943, -8.2255546856260799852e-3}},
    {{-0.4000000000000000222, 0.2000000000000000111}, {0.10000000000000000555, 0.0}, {3.0, -2.0}, {0.63505368553837488656, 0.087031834105452587639}},
    {{0.0, 0.0}, {0.0, 0.0}, {2.0, 0.0}, {0.5493061443340548457, 0.0}},
    {{1.0, 0.0}, {0.0, 0.0}, {2.0, 0.0}, {0.098612288668109691395, 0.0}},
    {{0.2000000000000000111, 0.0}, {0.69999999999999995559, 0.0}, {0.5, -1.5}, {-0.32964233966004830527, -0.2459041935006843558}},
}};
inline const std::array<LegendreRow, 7> kLegendreP{{
    {{0.5, 0.0}, {0.25, 0.0}, {1.0, 2.0}, {1.134383779038376575, 0.61923644440164234757}},
    {{0.2999999999999999889, 0.0}, {0.4000000000000000222, 0.0}, {2.0, 0.0}, {1.057610586034721127, 0.0}},
    {{1.6999999999999999556, 0.0}, {-0.5999999999999999778, 0.0}, {-1.5, 0.5}, {-0.033379166198358594195, -1.4681958205464566984}},
    {{-0.4000000000000000222, 0.2000000000000000111}, {0.10000000000000000555, 0.0}, {3.0, -2.0}, {0.74223448732512930173, 0.15921549621263538824}},
    {{0.0, 0.0}, {0.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}},
    {{1.0, 0.0}, {0.0, 0.0}, {2.0, 0.0}, {2.0, 0.0}},
    {{0.2000000000000000111, 0.0}, {0.69999999999999995559, 0.0}, {0.5, -1.5}, {0.46981813132269762677, -0.046513391191779035717}},
}};

}  // namespace oracle
