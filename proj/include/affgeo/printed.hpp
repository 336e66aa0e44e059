#pragma once
// Transcriptions of the published formulas, character for character apart from writing
// products with '*'.  The errata engine parses these; the numeric code in constclass and
// compat has its own hand transcription, and a test keeps the two in step.

#include <string>
#include <vector>

namespace affgeo::printed {

// Variable names used by the transcriptions.
const std::vector<std::string>& invariant_names();      // I40 I31 I22 I13 I04
const std::vector<std::string>& differential_names();   // the above, then D1I40..D1I04, D2I40..D2I04
const std::vector<std::string>& reduced_names();        // I40 I22 I04 k (the I13 = k H12 substitution)

// The four scalar compatibility conditions, with their derivative terms.
extern const char* const kCompat[4];

extern const char* const kJ1;
extern const char* const kJ2;
extern const char* const kK1;
extern const char* const kK2;
extern const char* const kH11;
extern const char* const kH12;
extern const char* const kH21;
extern const char* const kH22;
extern const char* const kK3Expansion;
extern const char* const kK21Expansion;
extern const char* const kReducedK21;   // K21 with I13 = I31 = 0
extern const char* const kI22FromReducedK21;
extern const char* const kG11;
extern const char* const kG12;
extern const char* const kG21;
extern const char* const kG22;
extern const char* const kLFactored;    // 384 H12 (...), the "-21" variant inside
extern const char* const kMInL;         // just the bracket of kLFactored
extern const char* const kMSet;         // the separately displayed M, "-2" variant

// Case-branch displays.  Variables: see each comment in printed.cpp.
extern const char* const kCase1iiK1;    // I40 I04
extern const char* const kCase2iK1;     // I40 k
extern const char* const kCase2iK2;     // I40 k
extern const char* const kCase2iiaK1;   // I40 I04
extern const char* const kCase2iiaK2;   // I40 I04
extern const char* const kCase2iiaK3;   // I40 I04

}  // namespace affgeo::printed
