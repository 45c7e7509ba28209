#include "pathmin/oracle.hpp"

#include <stdexcept>

namespace pathmin {

bool CompOrder::operator()(NodeId v, NodeId u) const {
    if (v == u) {
        throw std::invalid_argument("CompOrder: a node is not strictly less than itself");
    }
    ++comparisons_;
    if (v == root_) return false;
    if (u == root_) return true;
    if (oracle_->less(v, u)) return true;
    if (oracle_->less(u, v)) return false;
    return v < u;
}

}  // namespace pathmin
