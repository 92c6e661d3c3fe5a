from enum import Enum


class Modality(Enum):
    TEXT = "text"
    IMAGE = "image"

    @property
    def counterpart(self):
        return Modality.IMAGE if self is Modality.TEXT else Modality.TEXT
