#pragma once

#include <functional>
#include <vector>

#include "sggnn/dataset.hpp"
#include "sggnn/matrix.hpp"
#include "sggnn/operators.hpp"

namespace sggnn::nn {

enum class Nonlinearity { relu, identity };

inline DenseMatrix apply_nonlinearity(const DenseMatrix& m, Nonlinearity f) {
    return f == Nonlinearity::relu ? m.cwiseMax(0.0).eval() : m;
}

// Reverse-mode tape over dense matrices. Values are computed eagerly; one
// backward() pass (after seeding via softmax_cross_entropy or seed_grad)
// accumulates gradients for every node. Referenced SparseOperators must
// outlive the tape.
class Tape {
public:
    using Id = int;

    Id leaf(DenseMatrix v);
    Id matmul(Id a, Id b);
    Id spmm(const SparseOperator& op, Id h);
    Id add(Id a, Id b);
    Id add_bias(Id a, Id bias);  // bias is 1 x k, broadcast over rows
    Id activate(Id a, Nonlinearity f);
    Id concat_cols(const std::vector<Id>& parts);

    // Branch aggregation with softmax weights over pre-activation scores:
    // global takes scores R x 1 and emits [a_1 H_1 | ... | a_R H_R];
    // node takes scores N x R and scales row i of branch r by a_ir.
    Id softmax_scale_global(const std::vector<Id>& branches, Id scores);
    Id softmax_scale_node(const std::vector<Id>& branches, Id scores);

    const DenseMatrix& value(Id id) const { return nodes_[static_cast<std::size_t>(id)].value; }
    const DenseMatrix& grad(Id id) const { return nodes_[static_cast<std::size_t>(id)].grad; }

    // Mean cross-entropy of softmax(logits) over mask rows; seeds the logits
    // gradient. Empty mask is an error.
    double softmax_cross_entropy(Id logits, const std::vector<int>& labels, const Mask& mask);

    void seed_grad(Id id, const DenseMatrix& g);
    void backward();

private:
    struct Node {
        DenseMatrix value;
        DenseMatrix grad;
        std::function<void(Tape&)> back;
    };
    std::vector<Node> nodes_;

    Id push(DenseMatrix value, std::function<void(Tape&)> back);
    DenseMatrix& grad_mut(Id id) { return nodes_[static_cast<std::size_t>(id)].grad; }
};

// Row-softmax with max subtraction; each row sums to 1 and stays positive.
DenseMatrix softmax_rows(const DenseMatrix& scores);

// Test-mask classification accuracy; argmax ties resolve to the lowest index.
double accuracy(const DenseMatrix& logits, const std::vector<int>& labels, const Mask& mask);

}  // namespace sggnn::nn
