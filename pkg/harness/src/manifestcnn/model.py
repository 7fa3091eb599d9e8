"""The single-convolution classification network.

Smallest standard reading of a one-layer CNN: one 3x3 convolution
block (32 filters, stride 1, same padding), ReLU, 2x2 max pooling,
then a single fully connected head over the flattened feature map.
The forward pass returns logits; softmax is applied where class
probabilities are needed.
"""

import torch
from torch import nn

FILTERS = 32
KERNEL = 3


class OneConvNet(nn.Module):
    def __init__(self, side: int, n_classes: int):
        super().__init__()
        if side < 2:
            raise ValueError(f"image side must be >= 2, got {side}")
        if n_classes < 2:
            raise ValueError(f"need >= 2 classes, got {n_classes}")
        self.conv = nn.Conv2d(1, FILTERS, KERNEL, stride=1, padding=KERNEL // 2)
        self.act = nn.ReLU()
        self.pool = nn.MaxPool2d(2)
        self.flatten = nn.Flatten()
        self.head = nn.Linear(FILTERS * (side // 2) * (side // 2), n_classes)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        return self.head(self.flatten(self.pool(self.act(self.conv(x)))))
