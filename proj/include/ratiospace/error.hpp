#ifndef RATIOSPACE_ERROR_HPP
#define RATIOSPACE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratiospace {

enum class ErrorCode
{
    NotSalient,
    ZeroGenerator,
    NotFullRank,
    DimensionMismatch,
    ZeroFace,
    NotAFace,
    TrivialMonoid,
    NotInteriorHom,
    NotInChart,
    SectionMismatch,
    InvalidPoint,
    EmptyStratum,
    NotInMonoid,
    DimensionUnsupported,
    RayOutsideCone,
    InvalidFan,
    InvalidInput
};

std::string_view error_code_name(ErrorCode code);

/**
 * Exception thrown by every operation in the library. The code identifies
 * the failure class so that front ends can map it to a stable identifier.
 */
class Error : public std::runtime_error
{
    public:
        Error(ErrorCode code, const std::string& what)
            : std::runtime_error(what), code_(code) {}

        ErrorCode code() const noexcept { return code_; }

    private:
        ErrorCode code_;
};

}   // namespace ratiospace

#endif
