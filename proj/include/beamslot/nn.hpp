// SPDX-License-Identifier: Apache-2.0
//
// beamslot - joint mmWave beam tracking and TDD slot allocation simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef BEAMSLOT_NN_HPP
#define BEAMSLOT_NN_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "beamslot/rng.hpp"

namespace beamslot::nn {

// Row-major dense matrix.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

// Output head of a network: probability simplex for the actor, raw
// scalar(s) for the critic.
enum class Head : int { kSoftmax = 0, kIdentity = 1 };

// One dense layer y = W x + b; W is (output x input).
struct Layer {
    Matrix weights;
    std::vector<double> bias;
};

// Parameter-shaped gradient (or moment) accumulators.
struct Gradients {
    std::vector<Matrix> weights;
    std::vector<std::vector<double>> bias;

    void set_zero();
};

// Activations retained by a forward pass for the matching backward pass:
// inputs[l] is the input vector of layer l (inputs[0] is the network
// input), output is the post-head result.
struct ForwardCache {
    std::vector<std::vector<double>> inputs;
    std::vector<double> output;
};

// Fully connected tanh network with a configurable output head.
// Hidden activations are tanh; the softmax head is computed with the
// max-logit shift so large logits cannot overflow.
class DenseNet {
  public:
    DenseNet() = default;

    // Zero-initialized network; layer_sizes lists every layer width,
    // e.g. {state, 64, 64, actions}. Requires >= 2 entries, all >= 1.
    DenseNet(std::vector<int> layer_sizes, Head head);

    // Glorot-uniform weights (U(+-sqrt(6/(fan_in+fan_out)))), zero biases.
    static DenseNet with_glorot_init(std::vector<int> layer_sizes, Head head, RngStream& rng);

    std::vector<double> forward(std::span<const double> x) const;
    std::vector<double> forward(std::span<const double> x, ForwardCache& cache) const;

    // Chain-rule gradients of a scalar loss with respect to every weight
    // and bias, given dL/d(output) (gradient w.r.t. the post-head
    // output; the softmax Jacobian is applied internally). Accumulates
    // into `accum`, which must be shaped like make_zero_gradients().
    void backward(const ForwardCache& cache, std::span<const double> output_gradient,
                  Gradients& accum) const;

    Gradients make_zero_gradients() const;

    int input_size() const { return sizes_.front(); }
    int output_size() const { return sizes_.back(); }
    Head head() const { return head_; }
    const std::vector<int>& layer_sizes() const { return sizes_; }
    const std::vector<Layer>& layers() const { return layers_; }
    std::vector<Layer>& layers() { return layers_; }

    // Binary weight stream: little-endian, "DNET" magic, format version,
    // head tag, layer count, then per layer (rows, cols), row-major
    // weights and biases as 64-bit floats. The round trip is bit exact.
    void save_weights(std::ostream& out) const;
    void save_weights_file(const std::string& path) const;

    // Replaces this network's weights from a stream. The stream must
    // describe the exact same architecture (sizes and head); corrupt or
    // truncated streams are rejected without modifying the network.
    void load_weights(std::istream& in);

    // Reconstructs a network (architecture and weights) from a stream.
    static DenseNet read_from(std::istream& in);
    static DenseNet read_from_file(const std::string& path);

  private:
    std::vector<int> sizes_;
    Head head_ = Head::kIdentity;
    std::vector<Layer> layers_;
};

// Adam optimizer state for one network.
struct AdamState {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    long step_count = 0;
    Gradients first_moment;
    Gradients second_moment;

    AdamState(const DenseNet& net, double lr);
};

// One Adam descent step on the given gradients (pass the gradient of the
// loss being minimized). Moment shapes must mirror the network.
void adam_step(DenseNet& net, const Gradients& grads, AdamState& state);

} // namespace beamslot::nn

#endif
