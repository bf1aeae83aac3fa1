"""KiteBL: kites pseudo BL a partir de pseudo hoops básicos finitos."""
