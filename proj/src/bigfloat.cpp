#include "abc/bigfloat.hpp"

#include "abc/errors.hpp"

namespace abc {

double ln(const Int& n) {
    if (n <= 0) throw DomainError("ln: argument must be positive");
    BigFloat x = BigFloat::of(n, 192);
    return x.log().to_double();
}

}  // namespace abc
