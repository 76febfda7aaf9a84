#pragma once

#include <stdexcept>
#include <string>

namespace blockdec {

enum class Errc {
    InvalidWeight,
    SelfLoop,
    DuplicatePair,
    NodeOutOfRange,
    NotSkewSymmetrizable,
    Parse,
    UnknownBlock,
    DataFileCorrupt,
    ArityMismatch,
    ModeViolation,
    RuleViolation,
    OverlapViolation,
    MixedWeightClash,
    ResultOutOfRange,
    NonSurfaceComplex,
    Io,
    Timeout,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace blockdec
