"""
Enumerations shared by all the xcmosbench sub-packages.

The string values are the tags used in the device library files.
"""

from enum import Enum


class DeviceClass(Enum):
    ChargeFET = 'ChargeFET'
    Ferroelectric = 'Ferroelectric'
    NDR = 'NDR'
    ASL = 'ASL'
    CSL = 'CSL'
    mLogic = 'mLogic'
    MEMTJ = 'MEMTJ'
    SWD = 'SWD'
    CoMET = 'CoMET'

    @property
    def is_charge(self):
        return self in CHARGE_CLASSES

    @property
    def is_spin(self):
        return self in SPIN_CLASSES


class AnisotropyKind(Enum):
    InPlane = 'InPlane'
    PMA = 'PMA'


class CslVariant(Enum):
    Base = 'Base'
    CopperCollector = 'CopperCollector'
    Complementary = 'Complementary'
    YIG = 'YIG'


class MemtjVariant(Enum):
    Standard = 'Standard'
    CompactSingleDomain = 'CompactSingleDomain'
    Preset = 'Preset'


class GateKind(Enum):
    INV = 'INV'
    NAND2 = 'NAND2'
    XOR2 = 'XOR2'
    MAJ3 = 'MAJ3'
    DominoFA = 'DominoFA'


CHARGE_CLASSES = frozenset([
    DeviceClass.ChargeFET,
    DeviceClass.Ferroelectric,
    DeviceClass.NDR,
])

SPIN_CLASSES = frozenset([
    DeviceClass.ASL,
    DeviceClass.CSL,
    DeviceClass.mLogic,
    DeviceClass.MEMTJ,
    DeviceClass.SWD,
    DeviceClass.CoMET,
])

# spintronic devices switched by a charge current (Joule heating, clocked supply)
CURRENT_DRIVEN_CLASSES = frozenset([
    DeviceClass.ASL,
    DeviceClass.CSL,
    DeviceClass.mLogic,
])

# spintronic devices switched by a voltage (magnetoelectric)
VOLTAGE_CONTROLLED_CLASSES = frozenset([
    DeviceClass.MEMTJ,
    DeviceClass.SWD,
    DeviceClass.CoMET,
])

# classes that must carry MagnetParams / SpinChannelParams
MAGNET_CLASSES = SPIN_CLASSES
CHANNEL_CLASSES = frozenset([DeviceClass.ASL, DeviceClass.CSL])

VARIANT_ENUMS = {
    DeviceClass.CSL: CslVariant,
    DeviceClass.MEMTJ: MemtjVariant,
}


class CircuitStyle(Enum):
    StaticCMOSLike = 'StaticCMOSLike'
    DominoNP = 'DominoNP'
    NdrClocked = 'NdrClocked'
    MajoritySpin = 'MajoritySpin'
    ComplementarySpin = 'ComplementarySpin'


class LimitedBy(Enum):
    Delay = 'Delay'
    Power = 'Power'


# device classes each circuit style can be built from
STYLE_CLASSES = {
    CircuitStyle.StaticCMOSLike: CHARGE_CLASSES,
    CircuitStyle.DominoNP: CHARGE_CLASSES,
    CircuitStyle.NdrClocked: frozenset([DeviceClass.NDR]),
    CircuitStyle.MajoritySpin: frozenset([
        DeviceClass.ASL,
        DeviceClass.CSL,
        DeviceClass.MEMTJ,
        DeviceClass.SWD,
        DeviceClass.CoMET,
    ]),
    CircuitStyle.ComplementarySpin: frozenset([DeviceClass.mLogic]),
}


class CnnKind(Enum):
    Analog = 'Analog'
    DigitalCMOSLike = 'DigitalCMOSLike'
    SpinDiffusion = 'SpinDiffusion'
    SpinHall = 'SpinHall'
    DomainWall = 'DomainWall'


# device classes each CNN cost model can be built from
CNN_KIND_CLASSES = {
    CnnKind.Analog: (DeviceClass.ChargeFET, DeviceClass.Ferroelectric),
    CnnKind.DigitalCMOSLike: (DeviceClass.ChargeFET, DeviceClass.Ferroelectric),
    CnnKind.SpinDiffusion: (DeviceClass.ASL,),
    CnnKind.SpinHall: (DeviceClass.CSL,),
    CnnKind.DomainWall: (DeviceClass.mLogic,),
}
