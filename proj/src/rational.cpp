#include "metra/rational.hpp"

#include "metra/errors.hpp"

namespace metra {

std::string rational_to_string(const Rational& q) {
    Rational c = q;  // two-argument construction may leave values non-canonical
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) fail("BadRational", "empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail("BadRational", "cannot parse rational '" + s + "'");
    if (q.get_den() == 0) fail("BadRational", "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace metra
