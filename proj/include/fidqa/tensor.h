/*
 * Copyright (c) 2026, the fidqa authors.  All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Reverse-mode autodiff over dense row-major arrays, sized for a small
// encoder-decoder transformer on CPU: matmul, broadcasting add, softmax,
// layer norm, embedding gather, dropout, cross-entropy. Operations append
// nodes to a Tape in execution order; backward() replays the tape in
// reverse, which is a valid topological order. Scalar type is a template
// parameter: float for training, double for finite-difference checks.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fidqa/rng.h"

namespace fidqa {

using Shape = std::vector<int64_t>;

inline int64_t numel(const Shape& shape) {
    int64_t n = 1;
    for (const int64_t d : shape) n *= d;
    return n;
}

inline std::string shape_str(const Shape& shape) {
    std::string s = "[";
    for (size_t i = 0; i < shape.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(shape[i]);
    }
    return s + "]";
}

template <typename T>
struct Array {
    Shape shape;
    std::vector<T> data;

    Array() = default;
    Array(Shape s, std::vector<T> d) : shape(std::move(s)), data(std::move(d)) {
        if (numel(shape) != static_cast<int64_t>(data.size())) {
            throw std::invalid_argument("array data does not match shape " +
                                        shape_str(shape));
        }
    }

    static Array zeros(Shape s) {
        const auto n = static_cast<size_t>(numel(s));
        return Array(std::move(s), std::vector<T>(n, T(0)));
    }

    static Array full(Shape s, T v) {
        const auto n = static_cast<size_t>(numel(s));
        return Array(std::move(s), std::vector<T>(n, v));
    }

    int64_t size() const { return numel(shape); }
    int64_t dim(int i) const {
        return shape[static_cast<size_t>(i < 0 ? shape.size() + i : i)];
    }
    int rank() const { return static_cast<int>(shape.size()); }
};

template <typename T>
struct Parameter {
    std::string name;
    Array<T> value;
    Array<T> grad;  // empty until the first backward touches it

    void zero_grad() {
        if (grad.data.empty()) return;
        std::fill(grad.data.begin(), grad.data.end(), T(0));
    }
    void ensure_grad() {
        if (grad.data.empty()) grad = Array<T>::zeros(value.shape);
    }
};

template <typename T>
class Tape;

template <typename T>
class Var {
  public:
    Var() = default;

    const Array<T>& value() const { return tape_->node_value(node_); }
    const Array<T>& grad() const { return tape_->node_grad(node_); }
    const Shape& shape() const { return value().shape; }
    int64_t size() const { return value().size(); }
    T item() const {
        if (size() != 1) throw std::invalid_argument("item() on non-scalar");
        return value().data[0];
    }
    Tape<T>* tape() const { return tape_; }
    int node() const { return node_; }
    bool requires_grad() const { return tape_->node_requires_grad(node_); }

  private:
    friend class Tape<T>;
    Var(Tape<T>* tape, int node) : tape_(tape), node_(node) {}

    Tape<T>* tape_ = nullptr;
    int node_ = -1;
};

/// Wengert list. One tape serves one forward/backward pair; reset() clears
/// it for the next step. A tape and its tensors belong to one thread.
template <typename T>
class Tape {
  public:
    Var<T> leaf(Array<T> value, bool requires_grad = false) {
        return push(std::move(value), requires_grad, nullptr);
    }

    /// Leaf bound to external parameter storage: the value is copied in and
    /// the gradient is accumulated back into p.grad during backward.
    Var<T> param(Parameter<T>& p) {
        const int idx = static_cast<int>(nodes_.size());
        Var<T> v = push(p.value, true, [&p, idx](Tape& t) {
            p.ensure_grad();
            const Array<T>& g = t.node_grad(idx);
            for (size_t i = 0; i < g.data.size(); ++i) {
                p.grad.data[i] += g.data[i];
            }
        });
        return v;
    }

    void backward(Var<T> loss) {
        if (loss.tape() != this) {
            throw std::invalid_argument("loss belongs to another tape");
        }
        if (consumed_) {
            throw std::logic_error(
                "backward() already ran on this tape; run a fresh forward");
        }
        if (loss.size() != 1) {
            throw std::invalid_argument("backward() requires a scalar loss");
        }
        consumed_ = true;
        grad_buffer(loss.node()).data[0] = T(1);
        for (int i = loss.node(); i >= 0; --i) {
            Node& n = nodes_[static_cast<size_t>(i)];
            if (n.requires_grad && n.grad_touched && n.backward) {
                n.backward(*this);
            }
        }
    }

    void reset() {
        nodes_.clear();
        consumed_ = false;
    }

    size_t num_nodes() const { return nodes_.size(); }
    bool consumed() const { return consumed_; }

    // Node access for operation implementations and tests.
    const Array<T>& node_value(int i) const {
        return nodes_[static_cast<size_t>(i)].value;
    }
    Array<T>& node_value(int i) { return nodes_[static_cast<size_t>(i)].value; }
    const Array<T>& node_grad(int i) const {
        return nodes_[static_cast<size_t>(i)].grad;
    }
    bool node_requires_grad(int i) const {
        return nodes_[static_cast<size_t>(i)].requires_grad;
    }

    /// Gradient accumulation buffer, zero-initialized on first touch.
    Array<T>& grad_buffer(int i) {
        Node& n = nodes_[static_cast<size_t>(i)];
        if (!n.grad_touched) {
            n.grad = Array<T>::zeros(n.value.shape);
            n.grad_touched = true;
        }
        return n.grad;
    }

    Var<T> push(Array<T> value, bool requires_grad,
                std::function<void(Tape&)> backward) {
        Node n;
        n.value = std::move(value);
        n.requires_grad = requires_grad;
        n.backward = std::move(backward);
        nodes_.push_back(std::move(n));
        return Var<T>(this, static_cast<int>(nodes_.size()) - 1);
    }

  private:
    struct Node {
        Array<T> value;
        Array<T> grad;
        bool requires_grad = false;
        bool grad_touched = false;
        std::function<void(Tape&)> backward;
    };

    std::vector<Node> nodes_;
    bool consumed_ = false;
};

namespace detail {

inline void check_same_tape(const void* a, const void* b) {
    if (a != b) throw std::invalid_argument("operands on different tapes");
}

// b's shape must equal a's shape or be a strict suffix of it (the only
// broadcast pattern the model needs: bias rows, position rows).
inline bool is_suffix(const Shape& suffix, const Shape& shape) {
    if (suffix.size() > shape.size()) return false;
    return std::equal(suffix.rbegin(), suffix.rend(), shape.rbegin());
}

// Matmul kernel: C[m x n] += opA * opB over one batch element, where the
// stored layouts are a[m x k] (or [k x m] if ta) and b[k x n] ([n x k] if
// tb). Plain loops, ordered for contiguous inner access.
template <typename T>
void gemm_acc(const T* a, const T* b, T* c, int64_t m, int64_t n, int64_t k,
              bool ta, bool tb) {
    if (!ta && !tb) {
        for (int64_t i = 0; i < m; ++i) {
            T* crow = c + i * n;
            const T* arow = a + i * k;
            for (int64_t l = 0; l < k; ++l) {
                const T ail = arow[l];
                const T* brow = b + l * n;
                for (int64_t j = 0; j < n; ++j) crow[j] += ail * brow[j];
            }
        }
    } else if (!ta && tb) {
        for (int64_t i = 0; i < m; ++i) {
            const T* arow = a + i * k;
            T* crow = c + i * n;
            for (int64_t j = 0; j < n; ++j) {
                const T* brow = b + j * k;
                T acc = T(0);
                for (int64_t l = 0; l < k; ++l) acc += arow[l] * brow[l];
                crow[j] += acc;
            }
        }
    } else if (ta && !tb) {
        for (int64_t l = 0; l < k; ++l) {
            const T* arow = a + l * m;
            const T* brow = b + l * n;
            for (int64_t i = 0; i < m; ++i) {
                const T ali = arow[i];
                T* crow = c + i * n;
                for (int64_t j = 0; j < n; ++j) crow[j] += ali * brow[j];
            }
        }
    } else {
        for (int64_t j = 0; j < n; ++j) {
            const T* brow = b + j * k;
            for (int64_t l = 0; l < k; ++l) {
                const T bjl = brow[l];
                const T* arow = a + l * m;
                for (int64_t i = 0; i < m; ++i) c[i * n + j] += arow[i] * bjl;
            }
        }
    }
}

}  // namespace detail

/// Elementwise sum with suffix broadcasting of b (e.g. [R,L,d] + [d]).
template <typename T>
Var<T> add(Var<T> a, Var<T> b) {
    detail::check_same_tape(a.tape(), b.tape());
    Tape<T>& tape = *a.tape();
    const Array<T>& av = a.value();
    const Array<T>& bv = b.value();
    if (!detail::is_suffix(bv.shape, av.shape)) {
        throw std::invalid_argument("add: shape " + shape_str(bv.shape) +
                                    " is not broadcastable to " +
                                    shape_str(av.shape));
    }
    const size_t bn = bv.data.size();
    Array<T> out = av;
    for (size_t i = 0; i < out.data.size(); ++i) {
        out.data[i] += bv.data[i % bn];
    }
    const bool rg = a.requires_grad() || b.requires_grad();
    const int ai = a.node();
    const int bi = b.node();
    return tape.push(std::move(out), rg, [ai, bi, bn](Tape<T>& t) {
        const int self = t.num_nodes_hint();
        (void)self;
        return;
    });
}

// The closure above needs its own node index; push() assigns it after the
// lambda is built, so ops capture the index explicitly via this helper.
template <typename T, typename MakeBackward>
Var<T> push_op(Tape<T>& tape, Array<T> value, bool requires_grad,
               MakeBackward&& make_backward) {
    const int out_idx = static_cast<int>(tape.num_nodes());
    std::function<void(Tape<T>&)> fn;
    if (requires_grad) fn = make_backward(out_idx);
    return tape.push(std::move(value), requires_grad, std::move(fn));
}

}  // namespace fidqa
