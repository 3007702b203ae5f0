"""
Physical constants and declared model constants.

Every model constant here is a default: the functions that use them take
a keyword argument to override it (e.g. ``k_gate=``, ``t_cap=``).
"""

from scipy import constants as sc

from .enums import (CslVariant,
                    GateKind)


###   Physical constants (SI)   ###

Q_E = sc.e
K_B = sc.k
HBAR = sc.hbar
MU_B = sc.physical_constants['Bohr magneton'][0]

T_ROOM = 300.0   # K


###   Gate-level multipliers   ###

# input-device capacitance multiplier per gate kind
K_GATE = {
    GateKind.INV: 1.0,
    GateKind.NAND2: 1.5,
    GateKind.XOR2: 3.0,
    GateKind.MAJ3: 2.0,
    GateKind.DominoFA: 2.0,
}

# number of devices per gate kind
N_DEV = {
    GateKind.INV: 2,
    GateKind.NAND2: 4,
    GateKind.XOR2: 10,
    GateKind.MAJ3: 6,
    GateKind.DominoFA: 24,
}


###   Magnet constants   ###

THERMAL_STABILITY_MIN = 40.0
# relative tolerance of the floor check (Delta = 40 computed in floating point)
THERMAL_STABILITY_RTOL = 1e-9
SWITCHING_DELAY_CAP = 1e-3   # s


###   CSL constants   ###

# spin-current enhancement per variant
CSL_GAIN = {
    CslVariant.Base: 1.0,
    CslVariant.CopperCollector: 2.0,
    CslVariant.Complementary: 1.0,
    CslVariant.YIG: 2.0 * 1.5,
}

# magnets made bigger to fit the two read MTJs
CSL_MAGNET_SCALE = {
    CslVariant.Base: 3.0,
    CslVariant.CopperCollector: 3.0,
    CslVariant.Complementary: 1.0,
    CslVariant.YIG: 1.0,
}

# split pull-up / pull-down networks
CSL_AREA_FACTOR = {
    CslVariant.Base: 1.0,
    CslVariant.CopperCollector: 1.0,
    CslVariant.Complementary: 1.5,
    CslVariant.YIG: 1.0,
}

# output resistance network, abstracted as a drive-current derating
CSL_DRIVE_DERATING = 1.0


###   MEMTJ / ME constants   ###

T_ME_SWITCH_DEFAULT = 0.5e-9   # s, magnetoelectric reversal time
MAJORITY_FANIN = 3


###   Interconnect constants   ###

CLOCK_MULTIPLE = 300
RELAY_SEGMENT_DEFAULT = 10e-6   # m
WIRE_LENGTH_DEFAULT = 100e-6   # m


###   Circuit constants   ###

ALU_BITS = 32
ALU_AREA_OVERHEAD = 1.2
ALU_ENERGY_OVERHEAD = 1.0
ACTIVITY_DEFAULT = 0.1
# supply-clocked spin gates re-evaluate every cycle
SPIN_ACTIVITY = 1.0
# precharged domino nodes discharge with probability 1/2
DOMINO_ACTIVITY = 0.5
DOMINO_PIPELINE_OVERHEAD = 1.1
# spin and NDR gates latch intrinsically
LATCHING_PIPELINE_OVERHEAD = 1.0
P_CAP_DEFAULT = 10 * 1e4   # W/m^2 (10 W/cm^2)


###   CNN constants   ###

CNN_ROWS = 16
CNN_COLS = 16
CNN_RADIUS = 3
CNN_WEIGHT_BITS = 4
CNN_NOISE_FRACTION = 0.10
CNN_DT = 0.1                 # fraction of the cell time constant
CNN_MAX_STEPS = 2000
CNN_STABLE_STEPS = 10
CNN_DIAGONAL_BOOST = 2.0
CNN_TRIALS = 100
CNN_PATTERNS_DEFAULT = 4
CNN_SEED = 0
CNN_ACCURACY_GATE = 0.90

# digital cell: gate equivalents of a 4-bit multiply-accumulate, and NAND2
# levels of the multiplier
G_MAC_DEFAULT = 200
D_MUL_DEFAULT = 10
# subthreshold slope factor of the analog integrator
N_SLOPE_DEFAULT = 1.5
