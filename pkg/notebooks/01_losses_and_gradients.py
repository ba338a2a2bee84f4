"""
Losses of the inversion-specific GAN, and checking their gradients
==================================================================

The discriminator has K+1 outputs: K classes of the target network plus one
"fake" class.  It learns the target's soft labels on public images, and
separates real from generated images through the fake class.  This script
evaluates each loss on small hand-built models, where the value is known in
closed form, and then runs the finite-difference gradient checker.
"""

import math

import torch
from torch import nn

from mirattack.diffcore import grad_check, softmax
from mirattack.gantrain import disc_supervised_loss, disc_unsupervised_loss, entropy_term
from mirattack.models import Model, build_model

torch.manual_seed(0)

# softmax subtracts the max first, so huge logits do not overflow
print(softmax(torch.tensor([0.0, math.log(3)])))   # [0.25, 0.75]
print(softmax(torch.tensor([1000.0, 0.0])))        # [1, 0]


# A "model" that ignores its input and returns fixed logits.  Wrapping it in
# Model gives it the arity / tap interface the losses expect.
class Fixed(nn.Module):
    def __init__(self, logits):
        super().__init__()
        self.register_buffer("logits", torch.tensor(logits))

    def forward(self, x):
        return self.logits.expand(len(x), -1)


def fixed(logits):
    return Model("fixed", [("f", Fixed(logits))], (1, 2, 2), len(logits), None, {})


x = torch.zeros(4, 1, 2, 2)
K = 5

# uniform target labels against a discriminator that is uniform over the K classes
# and puts no mass on "fake": L_sup = ln 5
D = fixed([0.0] * K + [-1e4])
T = fixed([0.0] * K)
print("L_sup", disc_supervised_loss(D, T, x).item(), "ln5 =", math.log(5))

# entropy of D's first-K probabilities: ln 5 when uniform, 0 when one-hot
print("H uniform", entropy_term(D, x).item())
print("H one-hot (~0; logs are clamped at 1e-12)", entropy_term(fixed([-1e4, 1e4, -1e4, -1e4, -1e4, -1e4]), x).item())

# D(x) = 1 - p(fake|x).  With p(fake) = 1/2 on real and fake batches,
# L_unsup = -log(1/2) - log(1 - 1/2) = 2 ln 2.
class Blank(nn.Module):
    def forward(self, z):
        return torch.zeros(len(z), 1, 2, 2)


G = Model("g", [("f", Blank())], (2,), 4, None, {})
half = fixed([math.log(0.25), math.log(0.25), math.log(0.5)])
print("L_unsup", disc_unsupervised_loss(half, G, x, torch.zeros(4, 2)).item(), "2ln2 =", 2 * math.log(2))

# Gradients: compare autograd against central differences in float64.  The
# report lists the worst relative error for every parameter tensor.
disc = build_model("disc-kplus1", K=5, in_shape=(1, 28, 28), width=4)
report = grad_check(disc, torch.rand(2, 1, 28, 28), lambda out: (out ** 2).mean() + out.sum(), max_entries=8)
print(report)

# A layer with a deliberately wrong backward pass is flagged by name.
class BadSquare(torch.autograd.Function):
    @staticmethod
    def forward(ctx, x):
        ctx.save_for_backward(x)
        return x ** 2

    @staticmethod
    def backward(ctx, g):
        (x,) = ctx.saved_tensors
        return g * 3 * x   # should be 2x


class Bad(nn.Module):
    def __init__(self):
        super().__init__()
        self.lin = nn.Linear(3, 3)

    def forward(self, x):
        return BadSquare.apply(self.lin(x))


bad = grad_check(Bad(), torch.randn(4, 3), lambda out: out.sum())
print("bad layer passes?", bad.passed, "->", bad.failed_layers)
