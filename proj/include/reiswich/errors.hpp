#ifndef REISWICH_ERRORS_HPP
#define REISWICH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reiswich {

/// Input outside an operation's stated domain (n < 0, tau <= -1, m < 2, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// Malformed textual input ("p/q" rationals, JSON payloads).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exact check that a proved statement guarantees has failed. Never
/// expected to fire; if it does, the input data or the transcription is
/// wrong, not the caller.
class theorem_violation : public std::logic_error {
public:
    explicit theorem_violation(const std::string& what) : std::logic_error(what) {}
};

/// Root isolation was handed a polynomial with a repeated root.
class not_squarefree_error : public theorem_violation {
public:
    explicit not_squarefree_error(const std::string& what) : theorem_violation(what) {}
};

/// A certified-decimal request could not be met at the given enclosure
/// width / working precision. Recoverable: refine and retry.
class certification_error : public std::runtime_error {
public:
    explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace reiswich

#endif
