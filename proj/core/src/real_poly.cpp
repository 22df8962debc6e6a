#include "qfock/real_poly.hpp"

namespace qfock {

template class RealPolyT<double>;
template class RealPolyT<long double>;

}  // namespace qfock
