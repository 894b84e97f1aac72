/** Bundled matrix pairs worth exploring. Real entries only. */

export interface Preset {
  name: string;
  description: string;
  matrices: number[][][];
}

export const PRESETS: Preset[] = [
  {
    name: "E12 / E21",
    description: "unit off-diagonal pair; the cloud fills a genuinely 3D region",
    matrices: [
      [
        [0, 1],
        [0, 0],
      ],
      [
        [0, 0],
        [1, 0],
      ],
    ],
  },
  {
    name: "E12 / E11",
    description: "triangular pair with a known closed form; the cloud is a curve",
    matrices: [
      [
        [0, 1],
        [0, 0],
      ],
      [
        [1, 0],
        [0, 0],
      ],
    ],
  },
  {
    name: "Commuting diagonals",
    description: "commuting pair; every product collapses onto e^{A+B}",
    matrices: [
      [
        [0.3, 0],
        [0, -0.2],
      ],
      [
        [0.1, 0],
        [0, 0.4],
      ],
    ],
  },
  {
    name: "Quasi-commuting 3x3",
    description: "commutator is nonzero but commutes with both factors",
    matrices: [
      [
        [0, 1, 0],
        [0, 0, 0],
        [0, 0, 0],
      ],
      [
        [0, 0, 0],
        [0, 0, 1],
        [0, 0, 0],
      ],
    ],
  },
  {
    name: "Commutator equals B",
    description: "[A, B] = B for A = diag(1, 0), B = E12",
    matrices: [
      [
        [1, 0],
        [0, 0],
      ],
      [
        [0, 1],
        [0, 0],
      ],
    ],
  },
  {
    name: "Jordan block / diagonal",
    description: "a 2x2 Jordan block against a diagonal with distinct entries",
    matrices: [
      [
        [0.5, 1],
        [0, 0.5],
      ],
      [
        [1, 0],
        [0, -1],
      ],
    ],
  },
];

export const DEFAULT_PRESET = PRESETS[0];
