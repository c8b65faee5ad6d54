#include <lpont/error.hpp>
#include <lpont/rational.hpp>

namespace lpont {

std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0) {
        throw Error(ErrorKind::Parse, "invalid rational: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

}  // namespace lpont
