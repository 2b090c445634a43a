#ifndef KAWA_ERRORS_HPP
#define KAWA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kawa
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define KAWA_DEFINE_ERROR(name)                                                \
    class name : public Error                                                  \
    {                                                                          \
    public:                                                                    \
        using Error::Error;                                                    \
    }

KAWA_DEFINE_ERROR(DivisionByZeroInterval);
KAWA_DEFINE_ERROR(DomainError);
KAWA_DEFINE_ERROR(NotVerified);
KAWA_DEFINE_ERROR(DomainMismatch);
KAWA_DEFINE_ERROR(SymbolSingular);
KAWA_DEFINE_ERROR(WindowTooSmall);
KAWA_DEFINE_ERROR(ParamsOutOfRange);
KAWA_DEFINE_ERROR(NoConvergence);
KAWA_DEFINE_ERROR(SingularTruncation);
KAWA_DEFINE_ERROR(NegativeInner);
KAWA_DEFINE_ERROR(NuOutOfRange);
KAWA_DEFINE_ERROR(SweepStalled);
KAWA_DEFINE_ERROR(NeumannFails);
KAWA_DEFINE_ERROR(MissingArtifact);
KAWA_DEFINE_ERROR(ConfigError);

#undef KAWA_DEFINE_ERROR

} // namespace kawa

#endif
