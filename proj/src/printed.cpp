#include "affgeo/printed.hpp"

namespace affgeo::printed {

const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> n{"I40", "I31", "I22", "I13", "I04"};
  return n;
}

const std::vector<std::string>& differential_names() {
  static const std::vector<std::string> n = [] {
    std::vector<std::string> v = invariant_names();
    for (const char* d : {"D1", "D2"})
      for (const auto& s : invariant_names()) v.push_back(d + s);
    return v;
  }();
  return n;
}

const std::vector<std::string>& reduced_names() {
  static const std::vector<std::string> n{"I40", "I22", "I04", "k"};
  return n;
}

const char* const kCompat[4] = {
    "36*D2I31 - 36*D1I22 - 12*D2I13 + 12*D1I04 - 9*I40*I22 + 3*I40*I04 - 24*I31*I13 + 18*I22^2"
    " - 3*I22*I04 + 8*I13^2 - I04^2 - 18*I40 - 36*I22 - 18*I04",
    "12*D2I40 - 12*D1I31 + 12*D2I22 - 12*D1I13 - 3*I40*I31 - 23*I40*I13 + 18*I31*I22 + 5*I31*I04"
    " - 6*I22*I13 + I13*I04 + 48*I13",
    "12*D2I31 - 12*D1I22 + 12*D2I13 - 12*D1I04 - 3*I40*I22 - 7*I40*I04 - 16*I31*I13 + 18*I22^2"
    " + 5*I22*I04 - 16*I13^2 + I04^2 + 18*I40 - 36*I22 - 6*I04",
    "12*D2I40 + 12*D1I31 - 36*D2I22 + 36*D1I13 - 3*I40*I31 + I40*I13 + 6*I31*I22 + I31*I04"
    " + 6*I22*I13 - 3*I13*I04",
};

const char* const kJ1 = "(-23*I40 - 6*I22 + I04 + 48)*I13 + (-3*I40 + 18*I22 + 5*I04)*I31";
const char* const kJ2 = "(I40 + 6*I22 - 3*I04)*I13 + (-3*I40 + 6*I22 + I04)*I31";
const char* const kK1 =
    "-9*I40*I22 + 3*I40*I04 - 24*I31*I13 + 18*I22^2 - 3*I22*I04 + 8*I13^2 - I04^2 - 18*I40 - 36*I22 - 18*I04";
const char* const kK2 =
    "-3*I40*I22 - 7*I40*I04 - 16*I31*I13 + 18*I22^2 + 15*I22*I04 - 16*I13^2 + I04^2 + 18*I40 - 36*I22 - 6*I04";
const char* const kH11 = "-23*I40 - 6*I22 + I04 + 48";
const char* const kH12 = "-3*I40 + 18*I22 + 5*I04";
const char* const kH21 = "I40 + 6*I22 - 3*I04";
const char* const kH22 = "-3*I40 + 6*I22 + I04";
const char* const kK3Expansion =
    "9*I40^2 - 15*I40*I22 - 5*I40*I04 - 18*I22^2 + 3*I22*I04 + 2*I04^2 - 18*I40 + 36*I22 + 6*I04";
const char* const kK21Expansion =
    "(6*I40 + 18*I04)*I22 - 10*I40*I04 + 8*I31*I13 - 24*I13^2 + 2*I04^2 + 36*I40 + 12*I04";
const char* const kReducedK21 = "(3*I40 + 9*I04)*I22 - 5*I40*I04 + I04^2 + 18*I40 + 6*I04";
const char* const kI22FromReducedK21 = "-(-5*I40*I04 + I04^2 + 18*I40 + 6*I04)/(3*(I40 + 3*I04))";

// Variables I40 I22 I04 (k does not occur).
const char* const kG11 =
    "1728*I40^2 - 10368*I40*I22 - 3072*I40*I04 + 1152*I22*I04 + 320*I04^2 - 3456*I40 + 20736*I22 + 5760*I04";
const char* const kG12 = "-9*I40*I22 + 3*I40*I04 + 18*I22^2 - 3*I22*I04 - I04^2 - 18*I40 - 36*I22 - 18*I04";
const char* const kG21 =
    "960*I40^2 - 4608*I40*I22 - 1408*I40*I04 - 6912*I22^2 - 3072*I22*I04 - 320*I04^2 - 2304*I40 + 13824*I22 + 3840*I04";
const char* const kG22 = "-3*I40*I22 - 7*I40*I04 + 18*I22^2 + 15*I22*I04 + I04^2 + 18*I40 - 36*I22 - 6*I04";
#define AFFGEO_M_IN_L                                                                                    \
  "-3*I40^2*I22 + 13*I40^2*I04 - 21*I40*I22^2 - 24*I40*I22*I04 - 3*I40*I04^2 + 18*I22^3 + 3*I22^2*I04" \
  " + I22*I04^2 - 42*I40^2 + 15*I40*I22 - 33*I40*I04 - 18*I22^2 + 21*I22*I04 + I04^2 + 90*I40 - 36*I22"   \
  " + 18*I04"
const char* const kLFactored = "384*(-3*I40 + 18*I22 + 5*I04)*(" AFFGEO_M_IN_L ")";
const char* const kMInL = AFFGEO_M_IN_L;
#undef AFFGEO_M_IN_L
const char* const kMSet =
    "-3*I40^2*I22 + 13*I40^2*I04 - 2*I40*I22^2 - 24*I40*I22*I04 - 3*I40*I04^2 + 18*I22^3 + 3*I22^2*I04"
    " + I22*I04^2 - 42*I40^2 + 15*I40*I22 - 33*I40*I04 - 18*I22^2 + 21*I22*I04 + I04^2 + 90*I40 - 36*I22 + 18*I04";

// K1 after I13 = I31 = 0 and the reduced-K21 value of I22; variables I40 I04.
const char* const kCase1iiK1 =
    "-(4*(I04 - 3)*(3*I40 + I04)*(I40^2 - 2*I40*I04 + I04^2 + 24*I40 + 24*I04))/((I40 + 3*I04)^2)";
// H11 = H12 = 0 branch, I13 = k H22, I31 = -k H21; variables I40 k.
const char* const kCase2iK1 = "4*(2*I40 - 3)*(1024*I40*k^2 - 2112*k^2 + 16*I40 - 45)";
const char* const kCase2iK2 = "8*(64*k^2 - 3)*(2*I40 - 3)*(4*I40 - 9)";
// H12 = 0 branch, I13 = 0, I22 = (3 I40 - 5 I04)/18; variables I40 I04.
const char* const kCase2iiaK1 = "(1/9)*(3*I40 + I04)*(-3*I40 + 11*I04 - 72)";
const char* const kCase2iiaK2 = "-(4/9)*(3*I40 + I04)*(4*I04 - 9)";
const char* const kCase2iiaK3 = "-(2/9)*(3*I40 + I04)*(-9*I40 + I04 + 18)";

}  // namespace affgeo::printed
