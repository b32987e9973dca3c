#ifndef FRACDECOMP_ERRORS_HPP
#define FRACDECOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracdecomp {

/** Malformed input or a violated precondition. */
class InputError : public std::invalid_argument
{
    public:
        explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/**
 * A construction that cannot succeed on the given instance, e.g. an edge in
 * no triangle or a triangle whose weights fail the feasibility test. The
 * message carries the witness.
 */
class DecompositionFailure : public std::runtime_error
{
    public:
        explicit DecompositionFailure(const std::string& what) : std::runtime_error(what) {}
};

/** An internal invariant was broken; always a bug. */
class InternalError : public std::logic_error
{
    public:
        explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fracdecomp

#endif  // FRACDECOMP_ERRORS_HPP
