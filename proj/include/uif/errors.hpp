#pragma once

#include <stdexcept>
#include <string>

namespace uif {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ground-set size outside [1, 30].
struct NOutOfRange : Error {
    using Error::Error;
};

// An element label outside 1..n.
struct ElementOutOfRange : Error {
    using Error::Error;
};

// The same set appears twice in an input list. Duplicates are rejected, never
// merged, so a family's size always equals the number of sets supplied.
struct DuplicateSet : Error {
    using Error::Error;
};

// A numeric parameter violates an operation's precondition.
struct ParamOutOfRange : Error {
    using Error::Error;
};

// User-supplied extra sets for the star-plus construction are malformed.
struct BadExtras : Error {
    using Error::Error;
};

// A family expected to be k-uniform has members of different cardinalities.
struct NotUniform : Error {
    using Error::Error;
};

// The requested search instance exceeds the supported size caps.
struct TooLarge : Error {
    using Error::Error;
};

// The disjointness graph between the requested levels has no edges (i + j > n).
struct NoEdges : Error {
    using Error::Error;
};

// A verification routine was handed a family that does not satisfy the
// property the verification presupposes.
struct PreconditionFailed : Error {
    using Error::Error;
};

// A family file could not be parsed.
struct FileFormatError : Error {
    using Error::Error;
};

}  // namespace uif
